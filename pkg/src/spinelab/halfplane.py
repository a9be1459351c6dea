"""Upper half-plane arithmetic and the modular group action.

A point z with Im(z) > 0 encodes the flat torus obtained by gluing opposite
sides of the parallelogram spanned by 1 and z, rescaled to unit area.  Two
points give the same oriented torus exactly when they lie in one orbit of
the integer Moebius action

    z  ->  (a z + b) / (c z + d),        a d - b c = 1,

and the classical fundamental domain |z| >= 1, |Re z| <= 1/2 contains one
canonical representative per orbit once the boundary is tie-broken
(Re z = -1/2 is mapped to +1/2, and on |z| = 1 we keep Re z >= 0).
Unoriented tori additionally identify z with -conj(z).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

SQRT3 = math.sqrt(3.0)

#: The square torus.
SQUARE_POINT = complex(0.0, 1.0)
#: The hexagonal torus, exp(i pi / 3).
HEXAGONAL_POINT = complex(0.5, SQRT3 / 2.0)

DEFAULT_TOL = 1e-9

_MAX_REDUCTION_STEPS = 600


def require_upper(z: complex) -> complex:
    """Return z as a complex number, rejecting points outside Im > 0."""
    z = complex(z)
    if not z.imag > 0.0:
        raise ValueError(f"point {z} is not in the upper half-plane (Im > 0 required)")
    return z


@dataclass(frozen=True)
class UnimodularMatrix:
    """Integer matrix [[a, b], [c, d]] with determinant one."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"matrix {self.as_tuple()} has determinant != 1")

    @staticmethod
    def identity() -> "UnimodularMatrix":
        return UnimodularMatrix(1, 0, 0, 1)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def apply(self, z: complex) -> complex:
        return moebius_apply(self, z)

    def __matmul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        return UnimodularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "UnimodularMatrix":
        return UnimodularMatrix(self.d, -self.b, -self.c, self.a)


class TorusKind(enum.Enum):
    SQUARE = "square"
    HEXAGONAL = "hexagonal"
    RECTANGULAR = "rectangular"
    FAT_RHOMBIC = "fat_rhombic"
    THIN_RHOMBIC = "thin_rhombic"
    GENERIC = "generic"


class Reduction(NamedTuple):
    z0: complex
    matrix: UnimodularMatrix


def moebius_apply(m: UnimodularMatrix, z: complex) -> complex:
    """Apply the fractional linear map (a z + b) / (c z + d)."""
    z = require_upper(z)
    return (m.a * z + m.b) / (m.c * z + m.d)


def reduce_to_fundamental_domain(z: complex) -> Reduction:
    """Gauss-reduce z into |z| >= 1, Re z in (-1/2, 1/2].

    Alternates the translation that brings Re into (-1/2, 1/2] with the
    inversion z -> -1/z while |z| < 1, tracking the matrix applied so far.
    On the unit circle the representative with Re >= 0 is chosen.  The
    returned point is a fixed point of the procedure, so reduction is
    exactly idempotent.
    """
    z = require_upper(z)
    a, b, c, d = 1, 0, 0, 1
    re, im = z.real, z.imag
    r2 = re * re + im * im
    for _ in range(_MAX_REDUCTION_STEPS):
        n = math.ceil(re - 0.5)
        if n:
            re -= n
            a, b = a - n * c, b - n * d
        r2 = re * re + im * im
        if r2 < 1.0:
            # -1/z = (-re + i im) / |z|^2
            re, im = -re / r2, im / r2
            a, b, c, d = -c, -d, a, b
        else:
            break
    if r2 == 1.0 and re < 0.0:
        re = -re
        a, b, c, d = -c, -d, a, b
    return Reduction(complex(re, im), UnimodularMatrix(a, b, c, d))


def same_oriented_torus(z: complex, w: complex, tol: float = DEFAULT_TOL) -> bool:
    """True when z and w reduce to the same fundamental-domain point."""
    z0 = reduce_to_fundamental_domain(z).z0
    w0 = reduce_to_fundamental_domain(w).z0
    return abs(z0 - w0) <= tol


def same_unoriented_torus(z: complex, w: complex, tol: float = DEFAULT_TOL) -> bool:
    """True when z and w agree as tori up to a reflection."""
    w = require_upper(w)
    return same_oriented_torus(z, w, tol) or same_oriented_torus(z, -w.conjugate(), tol)


def classify_torus(z: complex, tol: float = DEFAULT_TOL) -> TorusKind:
    """Classify the reduced point; corner points win over the mirror loci."""
    z0 = reduce_to_fundamental_domain(z).z0
    if abs(z0 - SQUARE_POINT) <= tol:
        return TorusKind.SQUARE
    if abs(z0 - HEXAGONAL_POINT) <= tol:
        return TorusKind.HEXAGONAL
    if abs(z0.real) <= tol:
        return TorusKind.RECTANGULAR
    if abs(abs(z0) - 1.0) <= tol:
        return TorusKind.FAT_RHOMBIC
    if abs(z0.real - 0.5) <= tol:
        return TorusKind.THIN_RHOMBIC
    return TorusKind.GENERIC
