"""Split-quaternion (coquaternion) values and the fundamental algebra.

A split quaternion is q = q0 + q1*i + q2*j + q3*k with the basis rules
i*i = -1, j*j = k*k = +1 and i*j = k = -j*i, j*k = -i = -k*j, k*i = j = -i*k.
Pure split quaternions (q0 = 0) are identified with Minkowski 3-space under
the Lorentzian inner product <u,v> = -u1*v1 + u2*v2 + u3*v3, and the
quadratic form I_q = q*conj(q) = q0^2 + q1^2 - q2^2 - q3^2 splits the algebra
into timelike (I_q > 0), spacelike (I_q < 0) and lightlike (I_q = 0) values.

All values here are immutable and every operation is a pure function, so
instances are safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from numbers import Real

from . import _backend
from .errors import LightlikeInverse, LightlikeNormalization, NonFiniteValue


class CausalCharacter(Enum):
    """Three-way causal tag shared by quaternions and Minkowski 3-vectors."""

    TIMELIKE = "timelike"
    SPACELIKE = "spacelike"
    LIGHTLIKE = "lightlike"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ClassifyConfig:
    """Tolerance for the lightlike band.

    A value v with squared magnitude s classifies as lightlike when
    |v| <= tau * max(1, s); exact zero is always lightlike. The band is
    scale-aware so near-null floating-point values classify stably.
    """

    tau: float = 1e-12

    def __post_init__(self) -> None:
        if not (math.isfinite(self.tau) and self.tau >= 0.0):
            raise NonFiniteValue("tau must be finite and non-negative")

    def band(self, scale_sq: float) -> float:
        return self.tau * max(1.0, scale_sq)


DEFAULT_CLASSIFY = ClassifyConfig()


def _checked(value) -> float:
    x = float(value)
    if not math.isfinite(x):
        raise NonFiniteValue(f"component is not finite: {value!r}")
    return x


@dataclass(frozen=True)
class Vector3M:
    """Vector in Minkowski 3-space, signature (-, +, +)."""

    u1: float
    u2: float
    u3: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "u1", _checked(self.u1))
        object.__setattr__(self, "u2", _checked(self.u2))
        object.__setattr__(self, "u3", _checked(self.u3))

    def inner(self, other: "Vector3M") -> float:
        return lorentz_inner(self, other)

    def cross(self, other: "Vector3M") -> "Vector3M":
        return lorentz_cross(self, other)

    def classify(self, cfg: ClassifyConfig = DEFAULT_CLASSIFY) -> CausalCharacter:
        return classify_vector(self, cfg)

    def scaled(self, r: float) -> "Vector3M":
        return Vector3M(r * self.u1, r * self.u2, r * self.u3)

    def as_quaternion(self) -> "SplitQuaternion":
        return SplitQuaternion(0.0, self.u1, self.u2, self.u3)

    def is_zero(self) -> bool:
        return self.u1 == 0.0 and self.u2 == 0.0 and self.u3 == 0.0


def lorentz_inner(u: Vector3M, v: Vector3M) -> float:
    """Lorentzian inner product <u,v> = -u1*v1 + u2*v2 + u3*v3."""
    return -(u.u1 * v.u1) + u.u2 * v.u2 + u.u3 * v.u3


def lorentz_cross(u: Vector3M, v: Vector3M) -> Vector3M:
    """Lorentzian vector product.

    Formal determinant with first row (-e1, e2, e3); satisfies
    i x j = k and j x k = -i, and is Lorentz-orthogonal to both arguments.
    """
    return Vector3M(
        -(u.u2 * v.u3 - u.u3 * v.u2),
        -(u.u1 * v.u3 - u.u3 * v.u1),
        u.u1 * v.u2 - u.u2 * v.u1,
    )


def classify_vector(v: Vector3M, cfg: ClassifyConfig = DEFAULT_CLASSIFY) -> CausalCharacter:
    """Causal character of a 3-vector: spacelike <u,u> > 0, timelike < 0."""
    s = lorentz_inner(v, v)
    band = cfg.band(v.u1 * v.u1 + v.u2 * v.u2 + v.u3 * v.u3)
    if s > band:
        return CausalCharacter.SPACELIKE
    if s < -band:
        return CausalCharacter.TIMELIKE
    return CausalCharacter.LIGHTLIKE


@dataclass(frozen=True)
class SplitQuaternion:
    """Immutable split quaternion q0 + q1*i + q2*j + q3*k.

    Constructors reject NaN/Inf components: every closed form downstream
    assumes finite trigonometric/hyperbolic arguments.
    """

    q0: float
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "q0", _checked(self.q0))
        object.__setattr__(self, "q1", _checked(self.q1))
        object.__setattr__(self, "q2", _checked(self.q2))
        object.__setattr__(self, "q3", _checked(self.q3))

    # -- structure --------------------------------------------------------

    @property
    def scalar_part(self) -> float:
        return self.q0

    @property
    def vector_part(self) -> Vector3M:
        return Vector3M(self.q1, self.q2, self.q3)

    @staticmethod
    def from_scalar_vector(s: float, v: Vector3M) -> "SplitQuaternion":
        return SplitQuaternion(s, v.u1, v.u2, v.u3)

    def components(self) -> tuple[float, float, float, float]:
        return (self.q0, self.q1, self.q2, self.q3)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SplitQuaternion):
            return other
        if isinstance(other, Real):
            return SplitQuaternion(float(other))
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return SplitQuaternion(self.q0 + q.q0, self.q1 + q.q1, self.q2 + q.q2, self.q3 + q.q3)

    __radd__ = __add__

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return SplitQuaternion(self.q0 - q.q0, self.q1 - q.q1, self.q2 - q.q2, self.q3 - q.q3)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q - self

    def __neg__(self) -> "SplitQuaternion":
        return SplitQuaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __pos__(self) -> "SplitQuaternion":
        return self

    def __mul__(self, other):
        if isinstance(other, SplitQuaternion):
            return mul(self, other)
        if isinstance(other, Real):
            r = float(other)
            return SplitQuaternion(r * self.q0, r * self.q1, r * self.q2, r * self.q3)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            return self.__mul__(1.0 / float(other))
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        from .powers import pow_closed

        return pow_closed(self, n)

    # -- algebra ----------------------------------------------------------

    def conjugate(self) -> "SplitQuaternion":
        """Scalar part kept, vector part negated; an involution."""
        return SplitQuaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def iq(self) -> float:
        """Quadratic form I_q = q*conj(q) = q0^2 + q1^2 - q2^2 - q3^2."""
        return self.q0 * self.q0 + self.q1 * self.q1 - self.q2 * self.q2 - self.q3 * self.q3

    def norm(self) -> float:
        """N_q = sqrt(|I_q|); zero exactly for lightlike quaternions."""
        return math.sqrt(abs(self.iq()))

    def magnitude_sq(self) -> float:
        """Euclidean q0^2 + q1^2 + q2^2 + q3^2, used for tolerance scaling."""
        return self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3

    def classify(self, cfg: ClassifyConfig = DEFAULT_CLASSIFY) -> CausalCharacter:
        """Causal character from the sign of I_q, with the lightlike band."""
        s = self.iq()
        band = cfg.band(self.magnitude_sq())
        if s > band:
            return CausalCharacter.TIMELIKE
        if s < -band:
            return CausalCharacter.SPACELIKE
        return CausalCharacter.LIGHTLIKE

    def normalize(self, cfg: ClassifyConfig = DEFAULT_CLASSIFY) -> "SplitQuaternion":
        """q / N_q, the unit representative; undefined for lightlike q."""
        if self.classify(cfg) is CausalCharacter.LIGHTLIKE:
            raise LightlikeNormalization("lightlike quaternion has no unit representative")
        return self * (1.0 / self.norm())

    def inverse(self, cfg: ClassifyConfig = DEFAULT_CLASSIFY) -> "SplitQuaternion":
        """conj(q) / I_q; lightlike quaternions are zero divisors."""
        if self.classify(cfg) is CausalCharacter.LIGHTLIKE:
            raise LightlikeInverse("lightlike quaternion is a zero divisor, no inverse")
        return self.conjugate() * (1.0 / self.iq())

    def __str__(self) -> str:
        return format_quaternion(self)


ZERO = SplitQuaternion(0.0)
ONE = SplitQuaternion(1.0)
UNIT_I = SplitQuaternion(0.0, 1.0, 0.0, 0.0)
UNIT_J = SplitQuaternion(0.0, 0.0, 1.0, 0.0)
UNIT_K = SplitQuaternion(0.0, 0.0, 0.0, 1.0)


def mul(p: SplitQuaternion, q: SplitQuaternion) -> SplitQuaternion:
    """Split-quaternion product.

    The shipped path expands the 16 basis products; under __debug__ the
    scalar/vector formula recomputes the result as a cross-check.
    """
    c = _backend.kernels.quat_mul(p.q0, p.q1, p.q2, p.q3, q.q0, q.q1, q.q2, q.q3)
    if __debug__:
        f = _backend.kernels.quat_mul_formula(p.q0, p.q1, p.q2, p.q3, q.q0, q.q1, q.q2, q.q3)
        scale = max(1.0, p.magnitude_sq() * q.magnitude_sq())
        assert all(abs(ci - fi) <= 1e-12 * scale for ci, fi in zip(c, f)), \
            "table and scalar/vector product paths disagree"
    return SplitQuaternion(*c)


def classify(q: SplitQuaternion, cfg: ClassifyConfig = DEFAULT_CLASSIFY) -> CausalCharacter:
    return q.classify(cfg)


# -- textual form ----------------------------------------------------------


def format_number(x: float) -> str:
    """Shortest decimal that round-trips to x; integral floats lose the .0."""
    r = repr(x)
    if x == int(x):
        s = str(int(x))
        if len(s) <= len(r):
            return s
    return r


def format_quaternion(q: SplitQuaternion) -> str:
    """Compact `a+bi+cj+dk` form: zero terms elided, unit coefficients bare.

    Components are printed with round-trip precision, so parsing the result
    recovers q exactly.
    """
    parts: list[str] = []
    for coef, unit in ((q.q0, ""), (q.q1, "i"), (q.q2, "j"), (q.q3, "k")):
        if coef == 0.0:
            continue
        body = format_number(abs(coef))
        if unit:
            body = unit if body == "1" else body + unit
        if not parts:
            parts.append(("-" if coef < 0.0 else "") + body)
        else:
            parts.append(("-" if coef < 0.0 else "+") + body)
    return "".join(parts) if parts else "0"
