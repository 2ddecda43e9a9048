"""Polar decomposition of split quaternions by causal character.

Three forms exist, keyed by the character of q and of its vector part:

* timelike q, spacelike vector part:  q = sign * n * (cosh t + eps * sinh t)
* timelike q, timelike vector part:   q = n * (cos t + eps * sin t)
* spacelike q (vector part is then automatically spacelike):
                                      q = n * (sinh t + eps * cosh t)

with n = N_q > 0 and eps a unit axis in Minkowski 3-space. Lightlike
quaternions have no polar form, and neither does a timelike quaternion
whose nonzero vector part is null.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .algebra import (
    DEFAULT_CLASSIFY,
    CausalCharacter,
    ClassifyConfig,
    SplitQuaternion,
    Vector3M,
    classify_vector,
    lorentz_inner,
)
from .errors import InvalidAxis, LightlikeNoPolarForm, NonFiniteValue, NullVectorPart

AXIS_UNIT_TOL = 1e-9

# Deterministic axis for decomposing a timelike scalar (zero vector part);
# any spacelike unit axis works since sinh(0) = 0.
CANONICAL_SPACELIKE_AXIS = Vector3M(0.0, 0.0, 1.0)


class PolarKind(Enum):
    TIMELIKE_SPACELIKE_VEC = "timelike_spacelike_vec"
    TIMELIKE_TIMELIKE_VEC = "timelike_timelike_vec"
    SPACELIKE = "spacelike"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PolarForm:
    """Tagged polar decomposition (kind, norm, angle, unit axis, sign).

    ``sign`` is meaningful only for TIMELIKE_SPACELIKE_VEC (it absorbs a
    negative scalar part, which the cosh form cannot represent); it is +1
    for the other kinds.
    """

    kind: PolarKind
    n: float
    theta: float
    eps: Vector3M
    sign: int = 1

    def __post_init__(self) -> None:
        if not (math.isfinite(self.n) and self.n >= 0.0):
            raise NonFiniteValue("polar norm must be finite and non-negative")
        if not math.isfinite(self.theta):
            raise NonFiniteValue("polar angle must be finite")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


def _expected_axis_inner(kind: PolarKind) -> float:
    return -1.0 if kind is PolarKind.TIMELIKE_TIMELIKE_VEC else 1.0


def decompose(q: SplitQuaternion, cfg: ClassifyConfig = DEFAULT_CLASSIFY) -> PolarForm:
    """Polar-decompose q; raises for lightlike q or a null vector part.

    Branch selection and the extracted quantities:

    * timelike q, spacelike V: n = sqrt(I_q), sinh t = sqrt(<V,V>)/n,
      eps = V/sqrt(<V,V>), sign = sgn(q0), t >= 0.
    * timelike q, timelike V: n = sqrt(I_q), t = atan2(sqrt(-<V,V>), q0)
      in [0, pi], eps = V/sqrt(-<V,V>).
    * spacelike q: n = sqrt(-I_q), sinh t = q0/n, eps = V/sqrt(<V,V>).

    A timelike scalar (V = 0) takes the first branch with t = 0 and the
    canonical axis, keeping decomposition deterministic and total.
    """
    char = q.classify(cfg)
    if char is CausalCharacter.LIGHTLIKE:
        raise LightlikeNoPolarForm(f"no polar form for lightlike quaternion {q}")

    v = q.vector_part
    if char is CausalCharacter.TIMELIKE:
        n = math.sqrt(q.iq())
        sign = 1 if q.q0 >= 0.0 else -1
        if v.is_zero():
            return PolarForm(PolarKind.TIMELIKE_SPACELIKE_VEC, n, 0.0,
                             CANONICAL_SPACELIKE_AXIS, sign)
        vchar = classify_vector(v, cfg)
        if vchar is CausalCharacter.LIGHTLIKE:
            raise NullVectorPart(
                f"timelike quaternion {q} has a nonzero null vector part; no polar form"
            )
        vv = lorentz_inner(v, v)
        if vchar is CausalCharacter.SPACELIKE:
            sv = math.sqrt(vv)
            theta = math.asinh(sv / n)
            # The sign factors out of the whole form, so the axis flips
            # with it: q = sign * n * (cosh t + eps*sinh t) needs
            # eps = sign * V/|V| to reproduce the vector part.
            return PolarForm(PolarKind.TIMELIKE_SPACELIKE_VEC, n, theta,
                             v.scaled(sign / sv), sign)
        st = math.sqrt(-vv)
        theta = math.atan2(st, q.q0)
        return PolarForm(PolarKind.TIMELIKE_TIMELIKE_VEC, n, theta, v.scaled(1.0 / st))

    # Spacelike q: <V,V> = q0^2 - I_q > 0, so the axis is always spacelike.
    n = math.sqrt(-q.iq())
    vv = lorentz_inner(v, v)
    sv = math.sqrt(vv)
    theta = math.asinh(q.q0 / n)
    return PolarForm(PolarKind.SPACELIKE, n, theta, v.scaled(1.0 / sv))


def reconstruct(f: PolarForm) -> SplitQuaternion:
    """Rebuild the quaternion a polar form denotes.

    Raises InvalidAxis when the axis misses its kind's unit condition by
    more than 1e-9.
    """
    s = lorentz_inner(f.eps, f.eps)
    expected = _expected_axis_inner(f.kind)
    if abs(s - expected) > AXIS_UNIT_TOL:
        raise InvalidAxis(
            f"axis {f.eps} has <eps,eps> = {s!r}, expected {expected:+.0f} for {f.kind}"
        )
    if f.kind is PolarKind.TIMELIKE_SPACELIKE_VEC:
        scalar = f.sign * f.n * math.cosh(f.theta)
        radial = f.sign * f.n * math.sinh(f.theta)
    elif f.kind is PolarKind.TIMELIKE_TIMELIKE_VEC:
        scalar = f.n * math.cos(f.theta)
        radial = f.n * math.sin(f.theta)
    else:
        scalar = f.n * math.sinh(f.theta)
        radial = f.n * math.cosh(f.theta)
    return SplitQuaternion.from_scalar_vector(scalar, f.eps.scaled(radial))
