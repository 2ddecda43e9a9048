"""Closed-form integer powers and matrix exponentials, plus their oracles.

The closed forms rest on the polar decomposition: multiplying the angle by n
gives q^n directly, and the same scalars build (L_q)^n and (R_q)^n as
a*I + b*L_eps without a single matrix multiplication. The brute-force
oracles (pow_naive, mat_pow_naive, mat_exp_series) stay independent of the
closed forms so each side can check the other.

Lightlike quaternions fall outside the polar forms; their powers and
exponentials are handled through the characteristic identity
q^2 = 2*S_q*q - I_q (so q^n = (2*q0)^(n-1) * q when I_q = 0) and through
(L_q)^2 = <V,V>*I for pure q, which makes the exponential series of a null
axis terminate after the linear term. These extensions are validated
against the oracles only.

Closed forms never emit Inf entries: when cosh/sinh/N^n exceed double
precision the operation raises OverflowedToInfinity instead.
"""

from __future__ import annotations

import math

from .algebra import (
    DEFAULT_CLASSIFY,
    CausalCharacter,
    ClassifyConfig,
    SplitQuaternion,
    Vector3M,
    lorentz_inner,
)
from .errors import (
    NegativePowerOfLightlike,
    NonFiniteValue,
    NonUnitAxis,
    OverflowedToInfinity,
    SeriesDidNotConverge,
)
from . import _backend
from .matrix import Mat4, left_matrix, quaternion_from_left, right_matrix
from .polar import PolarForm, PolarKind, decompose

AXIS_CLASS_TOL = 1e-9
SERIES_TOL = 1e-14
SERIES_MAX_TERMS = 200


def _overflow(what: str) -> OverflowedToInfinity:
    return OverflowedToInfinity(f"{what} overflowed double precision")


def _cosh(x: float) -> float:
    try:
        return math.cosh(x)
    except OverflowError:
        raise _overflow(f"cosh({x!r})") from None


def _sinh(x: float) -> float:
    try:
        return math.sinh(x)
    except OverflowError:
        raise _overflow(f"sinh({x!r})") from None


def _norm_pow(n_q: float, n: int) -> float:
    """N^n for N > 0 via exp(n*log N)."""
    try:
        return math.exp(n * math.log(n_q))
    except OverflowError:
        raise _overflow(f"{n_q!r}**{n}") from None


def _int_pow(base: float, n: int) -> float:
    try:
        return math.pow(base, n)
    except OverflowError:
        raise _overflow(f"{base!r}**{n}") from None


def _closed_scalars(f: PolarForm, n: int) -> tuple[float, float]:
    """Coefficients (a, b) with q^n = a + b*eps for the polar form f.

    Timelike/spacelike-vec: (cosh nt, sinh nt) with the sign factor sign^n;
    timelike/timelike-vec: (cos nt, sin nt); spacelike: parity decides
    between (sinh nt, cosh nt) for odd n and (cosh nt, sinh nt) for even n.
    All scaled by N^n.
    """
    nn = _norm_pow(f.n, n)
    nt = n * f.theta
    if f.kind is PolarKind.TIMELIKE_SPACELIKE_VEC:
        sgn = 1.0 if (f.sign > 0 or n % 2 == 0) else -1.0
        a = sgn * nn * _cosh(nt)
        b = sgn * nn * _sinh(nt)
    elif f.kind is PolarKind.TIMELIKE_TIMELIKE_VEC:
        a = nn * math.cos(nt)
        b = nn * math.sin(nt)
    elif n % 2 == 1:
        a = nn * _sinh(nt)
        b = nn * _cosh(nt)
    else:
        a = nn * _cosh(nt)
        b = nn * _sinh(nt)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise _overflow(f"closed-form power n={n}")
    return a, b


def pow_naive(q: SplitQuaternion, n: int) -> SplitQuaternion:
    """q**n by repeated multiplication; ground truth for the closed forms."""
    if n < 0:
        raise ValueError("pow_naive requires n >= 0")
    c = _backend.kernels.quat_pow_naive(q.q0, q.q1, q.q2, q.q3, n)
    try:
        return SplitQuaternion(*c)
    except NonFiniteValue:
        raise _overflow(f"naive power n={n}") from None


def pow_closed(q: SplitQuaternion, n: int, cfg: ClassifyConfig = DEFAULT_CLASSIFY) -> SplitQuaternion:
    """q**n in closed form for any integer n.

    Non-lightlike q dispatches on the polar decomposition. Lightlike q uses
    the characteristic-identity extension (n >= 0 only; negative powers of
    zero divisors do not exist). Negative n routes through the inverse.
    """
    if n == 0:
        return SplitQuaternion(1.0)
    lightlike = q.classify(cfg) is CausalCharacter.LIGHTLIKE
    if n < 0:
        if lightlike:
            raise NegativePowerOfLightlike(f"{q} is lightlike; negative powers undefined")
        return pow_closed(q.inverse(cfg), -n, cfg)
    if lightlike:
        coef = _int_pow(2.0 * q.q0, n - 1)
        try:
            return q * coef
        except NonFiniteValue:
            raise _overflow(f"lightlike power n={n}") from None
    f = decompose(q, cfg)
    a, b = _closed_scalars(f, n)
    try:
        return SplitQuaternion.from_scalar_vector(a, f.eps.scaled(b))
    except NonFiniteValue:
        raise _overflow(f"closed-form power n={n}") from None


def mat_pow_naive(m: Mat4, n: int) -> Mat4:
    """M**n by repeated matrix multiplication; the matrix-side oracle."""
    if n < 0:
        raise ValueError("mat_pow_naive requires n >= 0")
    entries = _backend.kernels.mat_pow_naive(m.entries, n)
    try:
        return Mat4(entries)
    except NonFiniteValue:
        raise _overflow(f"naive matrix power n={n}") from None


def _rep_pow_closed(q, n, cfg, rep) -> Mat4:
    if n < 0:
        raise ValueError("closed-form matrix powers require n >= 0")
    if q.classify(cfg) is CausalCharacter.LIGHTLIKE:
        # (L_q)^n = (2*q0)^(n-1) * L_q for I_q = 0, by the same
        # characteristic identity that powers lightlike quaternions.
        if n == 0:
            return Mat4.identity()
        coef = _int_pow(2.0 * q.q0, n - 1)
        try:
            return rep(q) * coef
        except NonFiniteValue:
            raise _overflow(f"lightlike matrix power n={n}") from None
    f = decompose(q, cfg)
    a, b = _closed_scalars(f, n)
    return _axis_combination(a, b, rep(f.eps.as_quaternion()))


def _axis_combination(a: float, b: float, axis_rep: Mat4) -> Mat4:
    """a*I + b*M for a pure-quaternion representation M (zero diagonal)."""
    e = axis_rep.entries
    out = [b * x for x in e]
    out[0] = a
    out[5] = a
    out[10] = a
    out[15] = a
    try:
        return Mat4(out)
    except NonFiniteValue:
        raise _overflow("closed-form matrix") from None


def left_pow_closed(q: SplitQuaternion, n: int, cfg: ClassifyConfig = DEFAULT_CLASSIFY) -> Mat4:
    """(L_q)^n from the polar data alone: scalars, one L_eps, one scale+add."""
    return _rep_pow_closed(q, n, cfg, left_matrix)


def right_pow_closed(q: SplitQuaternion, n: int, cfg: ClassifyConfig = DEFAULT_CLASSIFY) -> Mat4:
    """(R_q)^n from the polar data alone."""
    return _rep_pow_closed(q, n, cfg, right_matrix)


def _exp_closed(eps: Vector3M, theta: float, rep) -> Mat4:
    s = lorentz_inner(eps, eps)
    if abs(s - 1.0) <= AXIS_CLASS_TOL:
        a, b = _cosh(theta), _sinh(theta)
    elif abs(s + 1.0) <= AXIS_CLASS_TOL:
        a, b = math.cos(theta), math.sin(theta)
    elif abs(s) <= AXIS_CLASS_TOL:
        # Null axis: the squared representation vanishes, the series stops.
        a, b = 1.0, theta
    else:
        raise NonUnitAxis(f"axis {eps} has <eps,eps> = {s!r}, not in {{-1, 0, +1}}")
    return _axis_combination(a, b, rep(eps.as_quaternion()))


def exp_left_closed(eps: Vector3M, theta: float) -> Mat4:
    """exp(theta * L_eps) for a unit timelike/spacelike or null axis.

    Timelike axis: cos(theta)*I + sin(theta)*L_eps. Spacelike axis:
    cosh(theta)*I + sinh(theta)*L_eps. Null axis: I + theta*L_eps.
    """
    return _exp_closed(eps, theta, left_matrix)


def exp_right_closed(eps: Vector3M, theta: float) -> Mat4:
    """exp(theta * R_eps); same trichotomy as exp_left_closed."""
    return _exp_closed(eps, theta, right_matrix)


def mat_exp_series(m: Mat4, tol: float = SERIES_TOL, max_terms: int = SERIES_MAX_TERMS) -> Mat4:
    """Taylor-series matrix exponential; the oracle for the closed forms.

    Terms M^k/k! are accumulated (term <- term*M/k) until the next term's
    max-abs drops to tol relative to the partial sum, or max_terms is hit.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    entries, terms, status = _backend.kernels.mat_exp_series(m.entries, tol, max_terms)
    if status == 2:
        raise _overflow("matrix exponential series")
    if status == 1:
        raise SeriesDidNotConverge(
            f"series not below tol={tol!r} after {terms} terms"
        )
    return Mat4(entries)


def exp_quaternion(q: SplitQuaternion, tol: float = SERIES_TOL,
                   max_terms: int = SERIES_MAX_TERMS) -> SplitQuaternion:
    """exp(q) via the series exponential of the left representation.

    L is an algebra homomorphism, so exp(L_q) = L_{exp q}; the quaternion is
    read back off the resulting matrix. The structural check scales with the
    result's magnitude since the series error does too.
    """
    e = mat_exp_series(left_matrix(q), tol, max_terms)
    return quaternion_from_left(e, 1e-9 * max(1.0, e.max_abs()))
