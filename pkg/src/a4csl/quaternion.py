"""Quaternions with coefficients in Q(sqrt 5), plus the twist involution.

The twist of q = (a, b, c, d) is (a', b', d', c'): algebraic conjugation
applied componentwise combined with a swap of the last two components.
It is an involutory anti-automorphism (twist(p*q) = twist(q)*twist(p))
whose fixed points, inside the icosian ring, form the A4 lattice.

A quaternion q with |q * twist(q)| = n (a positive integer) induces the
orthogonal map x -> q*x*twist(q)/n; `rotation_matrix` returns it as an
exact 4x4 matrix over Q(sqrt 5), checked orthogonal with determinant +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .golden import RAT_ONE, RAT_ZERO, GoldenInt, GoldenRat, parse_golden_rat


def _as_rat(x: GoldenRat | GoldenInt | Fraction | int) -> GoldenRat:
    if isinstance(x, GoldenRat):
        return x
    if isinstance(x, GoldenInt):
        return GoldenRat(x, 1)
    if isinstance(x, int):
        return GoldenRat(GoldenInt(x, 0), 1)
    if isinstance(x, Fraction):
        return GoldenRat.make(GoldenInt(x.numerator, 0), x.denominator)
    raise TypeError(f"cannot interpret {x!r} as a quaternion coefficient")


@dataclass(frozen=True, slots=True)
class Quat:
    """A quaternion a + b*i + c*j + d*k over Q(sqrt 5)."""

    a: GoldenRat
    b: GoldenRat
    c: GoldenRat
    d: GoldenRat

    @staticmethod
    def of(a, b, c, d) -> Quat:
        return Quat(_as_rat(a), _as_rat(b), _as_rat(c), _as_rat(d))

    def components(self) -> tuple[GoldenRat, GoldenRat, GoldenRat, GoldenRat]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other: Quat) -> Quat:
        return Quat(self.a + other.a, self.b + other.b,
                    self.c + other.c, self.d + other.d)

    def __sub__(self, other: Quat) -> Quat:
        return Quat(self.a - other.a, self.b - other.b,
                    self.c - other.c, self.d - other.d)

    def __neg__(self) -> Quat:
        return Quat(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other) -> Quat:
        if isinstance(other, Quat):
            a1, b1, c1, d1 = self.a, self.b, self.c, self.d
            a2, b2, c2, d2 = other.a, other.b, other.c, other.d
            return Quat(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            )
        s = _as_rat(other)
        return Quat(self.a * s, self.b * s, self.c * s, self.d * s)

    def __rmul__(self, other) -> Quat:
        s = _as_rat(other)  # scalars are central
        return Quat(s * self.a, s * self.b, s * self.c, s * self.d)

    def __truediv__(self, other) -> Quat:
        s = _as_rat(other)
        return Quat(self.a / s, self.b / s, self.c / s, self.d / s)

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b) or bool(self.c) or bool(self.d)

    def conj(self) -> Quat:
        """Quaternionic conjugate (negate the imaginary part)."""
        return Quat(self.a, -self.b, -self.c, -self.d)

    def nr(self) -> GoldenRat:
        """Reduced norm q * conj(q) = a^2 + b^2 + c^2 + d^2."""
        return (self.a * self.a + self.b * self.b
                + self.c * self.c + self.d * self.d)

    def tr(self) -> GoldenRat:
        """Reduced trace q + conj(q) = 2a."""
        return self.a + self.a

    def twist(self) -> Quat:
        """(a, b, c, d) -> (conj a, conj b, conj d, conj c)."""
        return Quat(self.a.conj(), self.b.conj(), self.d.conj(), self.c.conj())

    def galois_conj(self) -> Quat:
        """Componentwise algebraic conjugation (no swap)."""
        return Quat(self.a.conj(), self.b.conj(), self.c.conj(), self.d.conj())

    def inverse(self) -> Quat:
        n = self.nr()
        if not n:
            raise ZeroDivisionError("inverse of zero quaternion")
        return self.conj() / n

    def dot(self, other: Quat) -> GoldenRat:
        """Componentwise inner product over Q(sqrt 5)."""
        return (self.a * other.a + self.b * other.b
                + self.c * other.c + self.d * other.d)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.components()) + ")"


QUAT_ZERO = Quat(RAT_ZERO, RAT_ZERO, RAT_ZERO, RAT_ZERO)
QUAT_ONE = Quat(RAT_ONE, RAT_ZERO, RAT_ZERO, RAT_ZERO)

_STANDARD_BASIS = (
    QUAT_ONE,
    Quat(RAT_ZERO, RAT_ONE, RAT_ZERO, RAT_ZERO),
    Quat(RAT_ZERO, RAT_ZERO, RAT_ONE, RAT_ZERO),
    Quat(RAT_ZERO, RAT_ZERO, RAT_ZERO, RAT_ONE),
)


def parse_quat(text: str) -> Quat:
    """Parse "(A,B,C,D)" with golden-rational components."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    parts = s.split(",")
    if len(parts) != 4:
        raise ValueError(f"expected 4 components in {text!r}")
    return Quat(*(parse_golden_rat(p) for p in parts))


def _det4(m: list[list[GoldenRat]]) -> GoldenRat:
    def det3(r):
        return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))

    total = RAT_ZERO
    sign = 1
    for col in range(4):
        minor = [[m[r][c] for c in range(4) if c != col] for r in range(1, 4)]
        term = m[0][col] * det3(minor)
        total = total + term if sign > 0 else total - term
        sign = -sign
    return total


@dataclass(frozen=True)
class RotationMatrix:
    """Exact 4x4 special orthogonal matrix over Q(sqrt 5)."""

    entries: tuple[tuple[GoldenRat, ...], ...]

    def __post_init__(self):
        m = self.entries
        if len(m) != 4 or any(len(r) != 4 for r in m):
            raise ValueError("rotation matrix must be 4x4")

    def column(self, j: int) -> tuple[GoldenRat, ...]:
        return tuple(self.entries[i][j] for i in range(4))

    def apply(self, x: Quat) -> Quat:
        comps = x.components()
        out = []
        for i in range(4):
            acc = RAT_ZERO
            for j in range(4):
                acc = acc + self.entries[i][j] * comps[j]
            out.append(acc)
        return Quat(*out)

    def __neg__(self) -> RotationMatrix:
        return RotationMatrix(tuple(tuple(-e for e in row) for row in self.entries))

    def is_orthogonal(self) -> bool:
        m = self.entries
        for i in range(4):
            for j in range(i, 4):
                acc = RAT_ZERO
                for k in range(4):
                    acc = acc + m[k][i] * m[k][j]
                if acc != (RAT_ONE if i == j else RAT_ZERO):
                    return False
        return True

    def det(self) -> GoldenRat:
        return _det4([list(r) for r in self.entries])

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]"
                         for row in self.entries)


def rotation_matrix(q: Quat, scale: int, check: bool = True) -> RotationMatrix:
    """Matrix of x -> q*x*twist(q)/scale in the standard basis 1, i, j, k.

    scale must be the positive integer with scale^2 = nr(q)*nr(twist q);
    the result is then orthogonal with determinant +1 (verified when
    check is true).
    """
    if not q:
        raise ValueError("zero quaternion induces no rotation")
    if scale <= 0:
        raise ValueError("scale must be a positive integer")
    norm_product = q.nr() * q.twist().nr()
    if norm_product != _as_rat(scale * scale):
        raise ValueError(
            f"scale {scale} does not match |q*twist(q)|: nr(q)*nr(twist q) = {norm_product}")
    tw = q.twist()
    cols = []
    for e in _STANDARD_BASIS:
        image = q * e * tw / scale
        cols.append(image.components())
    entries = tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))
    m = RotationMatrix(entries)
    if check:
        if not m.is_orthogonal():
            raise ArithmeticError("rotation image is not orthogonal")
        if m.det() != RAT_ONE:
            raise ArithmeticError("rotation has determinant != +1")
    return m
