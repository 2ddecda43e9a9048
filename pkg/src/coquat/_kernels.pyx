# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot numeric loops.

Mirrors coquat._kernels_py operation-for-operation (same accumulation
order); built with -ffp-contract=off so results match the pure backend.
"""

from libc.math cimport fabs, isfinite

NAME = "cython"


def quat_mul(double a0, double a1, double a2, double a3,
             double b0, double b1, double b2, double b3):
    return (
        a0 * b0 - a1 * b1 + a2 * b2 + a3 * b3,
        a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quat_mul_formula(double a0, double a1, double a2, double a3,
                     double b0, double b1, double b2, double b3):
    cdef double inner = -(a1 * b1) + a2 * b2 + a3 * b3
    cdef double x1 = -(a2 * b3 - a3 * b2)
    cdef double x2 = -(a1 * b3 - a3 * b1)
    cdef double x3 = a1 * b2 - a2 * b1
    return (
        a0 * b0 + inner,
        a0 * b1 + b0 * a1 + x1,
        a0 * b2 + b0 * a2 + x2,
        a0 * b3 + b0 * a3 + x3,
    )


def quat_pow_naive(double a0, double a1, double a2, double a3, long long n):
    cdef double r0 = 1.0, r1 = 0.0, r2 = 0.0, r3 = 0.0
    cdef double t0, t1, t2, t3
    cdef long long i
    for i in range(n):
        t0 = a0 * r0 - a1 * r1 + a2 * r2 + a3 * r3
        t1 = a0 * r1 + a1 * r0 - a2 * r3 + a3 * r2
        t2 = a0 * r2 - a1 * r3 + a2 * r0 + a3 * r1
        t3 = a0 * r3 + a1 * r2 - a2 * r1 + a3 * r0
        r0, r1, r2, r3 = t0, t1, t2, t3
    return (r0, r1, r2, r3)


cdef void _load(object seq, double* out) except *:
    cdef int i
    for i in range(16):
        out[i] = seq[i]


cdef void _mul_into(double* a, double* b, double* out) noexcept:
    cdef int r, c, k
    cdef double acc
    for r in range(4):
        for c in range(4):
            acc = 0.0
            for k in range(4):
                acc += a[4 * r + k] * b[4 * k + c]
            out[4 * r + c] = acc


cdef double _max_abs(double* m) noexcept:
    cdef double top = 0.0, ax
    cdef int i
    for i in range(16):
        ax = fabs(m[i])
        if ax > top:
            top = ax
    return top


cdef bint _all_finite(double* m) noexcept:
    cdef int i
    for i in range(16):
        if not isfinite(m[i]):
            return False
    return True


def mat_mul(object a, object b):
    cdef double A[16]
    cdef double B[16]
    cdef double C[16]
    _load(a, A)
    _load(b, B)
    _mul_into(A, B, C)
    return [C[i] for i in range(16)]


def mat_pow_naive(object m, long long n):
    cdef double M[16]
    cdef double acc[16]
    cdef double tmp[16]
    cdef int i
    cdef long long step
    _load(m, M)
    for i in range(16):
        acc[i] = 1.0 if i % 5 == 0 else 0.0
    for step in range(n):
        _mul_into(M, acc, tmp)
        for i in range(16):
            acc[i] = tmp[i]
    return [acc[i] for i in range(16)]


def mat_exp_series(object m, double tol, long long max_terms):
    cdef double M[16]
    cdef double acc[16]
    cdef double term[16]
    cdef double tmp[16]
    cdef double inv_k, bound
    cdef int i
    cdef long long k
    _load(m, M)
    for i in range(16):
        acc[i] = 1.0 if i % 5 == 0 else 0.0
        term[i] = acc[i]
    for k in range(1, max_terms + 1):
        _mul_into(term, M, tmp)
        inv_k = 1.0 / k
        for i in range(16):
            term[i] = tmp[i] * inv_k
        if not _all_finite(term):
            return [acc[i] for i in range(16)], k, 2
        bound = tol * max(1.0, _max_abs(acc))
        if _max_abs(term) <= bound:
            for i in range(16):
                acc[i] += term[i]
            return [acc[i] for i in range(16)], k, 0
        for i in range(16):
            acc[i] += term[i]
        if not _all_finite(acc):
            return [acc[i] for i in range(16)], k, 2
    return [acc[i] for i in range(16)], max_terms, 1
