"""Seeded random generators for quaternions of each causal class.

Shared by the self-test suite, the pytest suite and the benchmark so every
consumer draws from the same distributions. The rejection bands keep samples
away from the classification boundaries, where closed-form/naive comparisons
stop being numerically meaningful:

* |I_q| >= 0.5 for timelike/spacelike samples, |<V,V>| >= 0.25 for the
  vector-part character of timelike samples;
* spacelike samples additionally cap |q0| <= 0.6 * N_q (a rapidity cap) so
  the sign of I(q^n) stays far above rounding noise out to n = 20;
* lightlike samples come from component patterns with q0^2 + q1^2 equal to
  q2^2 + q3^2 exactly in floating point, with |q0| >= 0.25.
"""

from __future__ import annotations

import math
import random

from .algebra import SplitQuaternion, Vector3M

COMPONENT_RANGE = 2.0


def random_quaternion(rng: random.Random, span: float = COMPONENT_RANGE) -> SplitQuaternion:
    return SplitQuaternion(
        rng.uniform(-span, span),
        rng.uniform(-span, span),
        rng.uniform(-span, span),
        rng.uniform(-span, span),
    )


def _vv(q: SplitQuaternion) -> float:
    v = q.vector_part
    return v.inner(v)


def sample_timelike_spacelike_vec(rng: random.Random) -> SplitQuaternion:
    """Timelike quaternion whose vector part is spacelike."""
    while True:
        q = random_quaternion(rng)
        if q.iq() >= 0.5 and _vv(q) >= 0.25:
            return q


def sample_timelike_timelike_vec(rng: random.Random) -> SplitQuaternion:
    """Timelike quaternion whose vector part is timelike."""
    while True:
        q = random_quaternion(rng)
        if q.iq() >= 0.5 and _vv(q) <= -0.25:
            return q


def sample_spacelike(rng: random.Random) -> SplitQuaternion:
    """Spacelike quaternion with capped rapidity (see module docstring)."""
    while True:
        q = random_quaternion(rng)
        if q.iq() <= -0.5 and abs(q.q0) <= 0.6 * q.norm():
            return q


_LIGHTLIKE_PATTERNS = (
    lambda x, y, sx, sy: (x, y, sx * x, sy * y),
    lambda x, y, sx, sy: (x, y, sy * y, sx * x),
)


def sample_lightlike(rng: random.Random) -> SplitQuaternion:
    """Exactly-null quaternion: q2, q3 are sign/position shuffles of q0, q1."""
    while True:
        x = rng.uniform(-COMPONENT_RANGE, COMPONENT_RANGE)
        if abs(x) < 0.25:
            continue
        y = rng.uniform(-COMPONENT_RANGE, COMPONENT_RANGE)
        pattern = _LIGHTLIKE_PATTERNS[rng.randrange(2)]
        sx = 1.0 if rng.random() < 0.5 else -1.0
        sy = 1.0 if rng.random() < 0.5 else -1.0
        return SplitQuaternion(*pattern(x, y, sx, sy))


def sample_by_class(rng: random.Random, which: str) -> SplitQuaternion:
    return {
        "timelike_spacelike_vec": sample_timelike_spacelike_vec,
        "timelike_timelike_vec": sample_timelike_timelike_vec,
        "spacelike": sample_spacelike,
        "lightlike": sample_lightlike,
    }[which](rng)


CAUSAL_CLASSES = ("timelike_spacelike_vec", "timelike_timelike_vec", "spacelike", "lightlike")


def sample_non_lightlike(rng: random.Random) -> SplitQuaternion:
    """One of the three polar-decomposable classes, uniformly."""
    which = CAUSAL_CLASSES[rng.randrange(3)]
    return sample_by_class(rng, which)


def sample_unit_timelike_vector(rng: random.Random) -> Vector3M:
    """Unit timelike axis: -u1^2 + u2^2 + u3^2 = -1."""
    u2 = rng.uniform(-1.5, 1.5)
    u3 = rng.uniform(-1.5, 1.5)
    u1 = math.sqrt(1.0 + u2 * u2 + u3 * u3)
    if rng.random() < 0.5:
        u1 = -u1
    return Vector3M(u1, u2, u3)


def sample_unit_spacelike_vector(rng: random.Random) -> Vector3M:
    """Unit spacelike axis: -u1^2 + u2^2 + u3^2 = +1."""
    u1 = rng.uniform(-1.5, 1.5)
    r = math.sqrt(1.0 + u1 * u1)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    return Vector3M(u1, r * math.cos(phi), r * math.sin(phi))


def sample_unit_circular(rng: random.Random) -> tuple[SplitQuaternion, int]:
    """Unit timelike quaternion with timelike vector part, plus resample count.

    cos(phi) + eps*sin(phi) has I_q = 1 exactly in exact arithmetic, so its
    powers stay bounded for any n — the benchmark relies on that. Draws with
    |sin(phi)| below 1e-3 are resampled (the vector part would sit in the
    null band) and counted.
    """
    resamples = 0
    while True:
        phi = rng.uniform(0.0, math.pi)
        s = math.sin(phi)
        if abs(s) < 1e-3:
            resamples += 1
            continue
        eps = sample_unit_timelike_vector(rng)
        v = eps.scaled(s)
        return SplitQuaternion.from_scalar_vector(math.cos(phi), v), resamples
