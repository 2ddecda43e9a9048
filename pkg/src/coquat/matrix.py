"""4x4 real matrices and the left/right representations of split quaternions.

Coordinates are always taken with respect to the basis (1, i, j, k), so a
quaternion q corresponds to the column vector (q0, q1, q2, q3). The left
representation satisfies L_q * coords(p) = coords(q*p) and is an algebra
homomorphism (L_{pq} = L_p L_q); the right representation satisfies
R_q * coords(p) = coords(p*q) and reverses products (R_{pq} = R_q R_p).

Matrices are stored row-major so entries can be audited by eye:

    L_q = [[ q0, -q1,  q2,  q3],        R_q = [[ q0, -q1,  q2,  q3],
           [ q1,  q0,  q3, -q2],               [ q1,  q0, -q3,  q2],
           [ q2,  q3,  q0, -q1],               [ q2, -q3,  q0,  q1],
           [ q3, -q2,  q1,  q0]]               [ q3,  q2, -q1,  q0]]
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence

from . import _backend
from .algebra import SplitQuaternion
from .errors import NonFiniteValue, NotALeftRepresentation

LEFT_REP_TOL = 1e-9


class QuatCoords(NamedTuple):
    """Column vector of quaternion coordinates in the basis (1, i, j, k)."""

    q0: float
    q1: float
    q2: float
    q3: float


class Mat4:
    """Immutable 4x4 real matrix, row-major, finite entries."""

    __slots__ = ("_e",)

    def __init__(self, entries: Iterable[float]):
        e = tuple(float(x) for x in entries)
        if len(e) != 16:
            raise ValueError(f"Mat4 needs 16 entries, got {len(e)}")
        for x in e:
            if not math.isfinite(x):
                raise NonFiniteValue(f"matrix entry is not finite: {x!r}")
        self._e = e

    @classmethod
    def identity(cls) -> "Mat4":
        return cls((1.0, 0.0, 0.0, 0.0,
                    0.0, 1.0, 0.0, 0.0,
                    0.0, 0.0, 1.0, 0.0,
                    0.0, 0.0, 0.0, 1.0))

    @classmethod
    def zero(cls) -> "Mat4":
        return cls((0.0,) * 16)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "Mat4":
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("expected 4 rows of 4 entries")
        return cls(x for row in rows for x in row)

    @property
    def entries(self) -> tuple[float, ...]:
        return self._e

    def rows(self) -> list[list[float]]:
        """Row-major nested lists; the JSON wire form of a matrix."""
        return [list(self._e[4 * r: 4 * r + 4]) for r in range(4)]

    def __getitem__(self, rc: tuple[int, int]) -> float:
        r, c = rc
        return self._e[4 * r + c]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat4):
            return NotImplemented
        return self._e == other._e

    def __hash__(self) -> int:
        return hash(self._e)

    def __repr__(self) -> str:
        return f"Mat4({self.rows()!r})"

    def __add__(self, other: "Mat4") -> "Mat4":
        if not isinstance(other, Mat4):
            return NotImplemented
        return Mat4(a + b for a, b in zip(self._e, other._e))

    def __sub__(self, other: "Mat4") -> "Mat4":
        if not isinstance(other, Mat4):
            return NotImplemented
        return Mat4(a - b for a, b in zip(self._e, other._e))

    def __neg__(self) -> "Mat4":
        return Mat4(-a for a in self._e)

    def __mul__(self, r):
        if isinstance(r, (int, float)):
            return Mat4(float(r) * a for a in self._e)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other: "Mat4") -> "Mat4":
        if not isinstance(other, Mat4):
            return NotImplemented
        return mat_mul(self, other)

    def max_abs(self) -> float:
        return max(abs(x) for x in self._e)


def mat_mul(a: Mat4, b: Mat4) -> Mat4:
    return Mat4(_backend.kernels.mat_mul(a.entries, b.entries))


def mat_add(a: Mat4, b: Mat4) -> Mat4:
    return a + b


def mat_scale(r: float, a: Mat4) -> Mat4:
    return a * r


def mat_identity() -> Mat4:
    return Mat4.identity()


def mat_max_abs_diff(a: Mat4, b: Mat4) -> float:
    return max(abs(x - y) for x, y in zip(a.entries, b.entries))


def left_matrix(q: SplitQuaternion) -> Mat4:
    """Left representation L_q; column 0 is coords(q)."""
    q0, q1, q2, q3 = q.components()
    return Mat4((
        q0, -q1, q2, q3,
        q1, q0, q3, -q2,
        q2, q3, q0, -q1,
        q3, -q2, q1, q0,
    ))


def right_matrix(q: SplitQuaternion) -> Mat4:
    """Right representation R_q; column 0 is coords(q)."""
    q0, q1, q2, q3 = q.components()
    return Mat4((
        q0, -q1, q2, q3,
        q1, q0, -q3, q2,
        q2, -q3, q0, q1,
        q3, q2, -q1, q0,
    ))


def coords(q: SplitQuaternion) -> QuatCoords:
    return QuatCoords(q.q0, q.q1, q.q2, q.q3)


def quaternion_from_coords(v: Sequence[float]) -> SplitQuaternion:
    return SplitQuaternion(v[0], v[1], v[2], v[3])


def apply(m: Mat4, v: Sequence[float]) -> QuatCoords:
    """Matrix-vector product in quaternion coordinates."""
    e = m.entries
    return QuatCoords(
        e[0] * v[0] + e[1] * v[1] + e[2] * v[2] + e[3] * v[3],
        e[4] * v[0] + e[5] * v[1] + e[6] * v[2] + e[7] * v[3],
        e[8] * v[0] + e[9] * v[1] + e[10] * v[2] + e[11] * v[3],
        e[12] * v[0] + e[13] * v[1] + e[14] * v[2] + e[15] * v[3],
    )


def quaternion_from_left(m: Mat4, tol: float = LEFT_REP_TOL) -> SplitQuaternion:
    """Invert the left representation.

    Reads q off column 0, rebuilds L_q and requires the max-abs deviation
    from m to be within tol; anything structurally off raises.
    """
    q = SplitQuaternion(m[0, 0], m[1, 0], m[2, 0], m[3, 0])
    dev = mat_max_abs_diff(m, left_matrix(q))
    if dev > tol:
        raise NotALeftRepresentation(
            f"matrix deviates from the left-representation layout by {dev:.3e} (tol {tol:.3e})"
        )
    return q
