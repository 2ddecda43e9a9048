"""Pure-Python fallback kernels.

These are the reference implementations of the hot numeric loops; the
compiled module ``coquat._kernels`` mirrors them operation-for-operation
(same accumulation order) so both backends agree to the last rounding.
Matrices are flat row-major sequences of 16 floats throughout.
"""

from __future__ import annotations

from math import isfinite

NAME = "python"

_IDENTITY = (
    1.0, 0.0, 0.0, 0.0,
    0.0, 1.0, 0.0, 0.0,
    0.0, 0.0, 1.0, 0.0,
    0.0, 0.0, 0.0, 1.0,
)


def quat_mul(a0, a1, a2, a3, b0, b1, b2, b3):
    """Split-quaternion product by expanding the 16 basis products."""
    return (
        a0 * b0 - a1 * b1 + a2 * b2 + a3 * b3,
        a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quat_mul_formula(a0, a1, a2, a3, b0, b1, b2, b3):
    """Split-quaternion product via the scalar/vector decomposition.

    Scalar: SpSq + <Vp,Vq> (Lorentzian); vector: Sp*Vq + Sq*Vp + Vp x Vq
    (Lorentzian cross). Used as the cross-check against quat_mul.
    """
    inner = -(a1 * b1) + a2 * b2 + a3 * b3
    x1 = -(a2 * b3 - a3 * b2)
    x2 = -(a1 * b3 - a3 * b1)
    x3 = a1 * b2 - a2 * b1
    return (
        a0 * b0 + inner,
        a0 * b1 + b0 * a1 + x1,
        a0 * b2 + b0 * a2 + x2,
        a0 * b3 + b0 * a3 + x3,
    )


def quat_pow_naive(a0, a1, a2, a3, n):
    """q**n by repeated left multiplication: q^n = q * q^(n-1)."""
    r0, r1, r2, r3 = 1.0, 0.0, 0.0, 0.0
    for _ in range(n):
        r0, r1, r2, r3 = (
            a0 * r0 - a1 * r1 + a2 * r2 + a3 * r3,
            a0 * r1 + a1 * r0 - a2 * r3 + a3 * r2,
            a0 * r2 - a1 * r3 + a2 * r0 + a3 * r1,
            a0 * r3 + a1 * r2 - a2 * r1 + a3 * r0,
        )
    return (r0, r1, r2, r3)


def mat_mul(a, b):
    """Row-major 4x4 matrix product as a list of 16 floats."""
    out = [0.0] * 16
    for r in range(4):
        rb = 4 * r
        for c in range(4):
            acc = 0.0
            for k in range(4):
                acc += a[rb + k] * b[4 * k + c]
            out[rb + c] = acc
    return out


def mat_pow_naive(m, n):
    """M**n by repeated left multiplication: M^n = M * M^(n-1)."""
    acc = list(_IDENTITY)
    for _ in range(n):
        acc = mat_mul(m, acc)
    return acc


def _max_abs(m):
    top = 0.0
    for x in m:
        ax = abs(x)
        if ax > top:
            top = ax
    return top


def _all_finite(m):
    for x in m:
        if not isfinite(x):
            return False
    return True


def mat_exp_series(m, tol, max_terms):
    """Taylor series exp(M) = sum M^k / k! with incremental terms.

    Each term is updated as term <- (term * M) / k. Accumulation stops once
    the next term's max-abs is <= tol * max(1, max-abs of the partial sum);
    that final small term is still added.

    Returns (entries, terms_used, status) with status 0 = converged,
    1 = max_terms reached, 2 = non-finite values encountered.
    """
    acc = list(_IDENTITY)
    term = list(_IDENTITY)
    for k in range(1, max_terms + 1):
        term = mat_mul(term, m)
        inv_k = 1.0 / k
        for idx in range(16):
            term[idx] *= inv_k
        if not _all_finite(term):
            return acc, k, 2
        bound = tol * max(1.0, _max_abs(acc))
        if _max_abs(term) <= bound:
            for idx in range(16):
                acc[idx] += term[idx]
            return acc, k, 0
        for idx in range(16):
            acc[idx] += term[idx]
        if not _all_finite(acc):
            return acc, k, 2
    return acc, max_terms, 1
