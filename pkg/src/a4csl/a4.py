"""The A4 root lattice inside the icosian ring, its similar sublattices
(SSLs) and coincidence site lattices (CSLs).

The twist-fixed icosians form a copy of the A4 root lattice once the
ambient bilinear form is taken to be Tr(x . y).  Conjugation by an
icosian q, x -> q x twist(q), preserves that fixed space, and this
module turns the algebra into explicit integer sublattices of A4:

* `ssl_of` maps an icosian to the similar sublattice q L twist(q),
* `csl_of` maps a primitive admissible icosian to its coincidence site
  lattice L(q), computed two independent ways (the twist-symmetrised
  right ideal, and the literal intersection L with R(q)L) which are
  checked against each other on every call,
* `denominator_of` computes the exact denominator of the induced
  orthogonal matrix, which is irrational precisely when nr(q) nr(q)' is
  not a perfect square.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from .golden import ONE, RAT_ZERO, GoldenInt, GoldenRat
from .icosian import (
    ICOSIAN_BASIS,
    ZBASIS,
    ExtensionPair,
    Icosian,
    NotAdmissibleError,
    _gr_inverse,
)
from .lattice import (
    ExactLattice,
    IntMatrix,
    det_int,
    hnf,
    lattice_index,
    lattice_intersect,
)
from .quaternion import Quat, RotationMatrix


def _half(x: GoldenInt) -> GoldenRat:
    return GoldenRat.make(x, 2)


#: Basis of the twist-fixed lattice, chosen so the Gram matrix below is
#: exactly the A4 Cartan matrix.
L_BASIS: tuple[Quat, ...] = (
    Quat.of(1, 0, 0, 0),
    Quat(_half(GoldenInt(-1, 0)), _half(ONE), _half(ONE), _half(ONE)),
    Quat.of(0, -1, 0, 0),
    Quat(RAT_ZERO, _half(ONE), _half(GoldenInt(-1, 1)), _half(GoldenInt(0, -1))),
)

CARTAN_A4: IntMatrix = (
    (2, -1, 0, 0),
    (-1, 2, -1, 0),
    (0, -1, 2, -1),
    (0, 0, -1, 2),
)


def phi_plus(q: Quat) -> Quat:
    """Twist symmetrisation q + twist(q), a projection onto the fixed
    space up to the factor 2."""
    return q + q.twist()


_LB_INV = _gr_inverse([list(b.components()) for b in L_BASIS])


def _tr_frac(x: GoldenRat) -> Fraction:
    a, b = x.as_fraction_pair()
    return 2 * a + b


def _check_basis() -> None:
    for b in L_BASIS:
        assert b.twist() == b
        Icosian.from_quat(b)  # raises if outside the icosian ring
    gram = [[_tr_frac(L_BASIS[i].dot(L_BASIS[j])) for j in range(4)]
            for i in range(4)]
    assert gram == [[Fraction(x) for x in row] for row in CARTAN_A4]


_check_basis()


def dual_lattice_gram() -> IntMatrix:
    """Gram matrix of the dual root lattice, rescaled by det = 5 to be
    integral (similar-sublattice counts are scale invariant)."""
    n = 4
    c = [[Fraction(CARTAN_A4[i][j]) for j in range(n)] for i in range(n)]
    # adjugate = det * inverse
    from .lattice import _rat_inverse

    inv = _rat_inverse(c)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            e = 5 * inv[i][j]
            assert e.denominator == 1
            row.append(int(e))
        out.append(tuple(row))
    return tuple(out)


def l_coords_rational(q: Quat) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coordinates of a twist-fixed quaternion in the L basis; they are
    always rational (the tau parts cancel), and this is checked."""
    comps = q.components()
    out = []
    for i in range(4):
        x = RAT_ZERO
        for k in range(4):
            x = x + comps[k] * _LB_INV[k][i]
        a, b = x.as_fraction_pair()
        if b:
            raise ValueError(f"{q} is not in the rational span of the L basis")
        out.append(a)
    return tuple(out)


def l_coords(q: Quat | Icosian) -> tuple[int, int, int, int]:
    """Integer coordinates of a lattice point of L; raises ValueError for
    quaternions outside L."""
    quat = q.quat if isinstance(q, Icosian) else q
    rat = l_coords_rational(quat)
    if any(x.denominator != 1 for x in rat):
        raise ValueError(f"{quat} is not a point of the root lattice")
    return tuple(int(x) for x in rat)


def l_contains(q: Quat | Icosian) -> bool:
    quat = q.quat if isinstance(q, Icosian) else q
    try:
        l_coords(quat)
    except ValueError:
        return False
    return True


def l_point(coords: Sequence[int]) -> Icosian:
    """The lattice point with the given L-basis coordinates."""
    q = Quat.of(0, 0, 0, 0)
    for c, b in zip(coords, L_BASIS):
        q = q + b * c
    return Icosian.from_quat(q)


@dataclass(frozen=True)
class CoordSublattice:
    """A full-rank sublattice of L in integer L-basis coordinates.

    `basis` is the canonical HNF basis (rows), `index` its index in L.
    """

    basis: IntMatrix
    index: int

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> CoordSublattice:
        h = hnf(rows)
        if len(h) != 4:
            raise ValueError("generators do not span a full-rank sublattice")
        return CoordSublattice(h, det_int(h))

    def contains(self, coords: Sequence[int]) -> bool:
        v = list(coords)
        for row in self.basis:
            lead = next(j for j, x in enumerate(row) if x)
            if v[lead] % row[lead]:
                return False
            q = v[lead] // row[lead]
            v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def gram(self, ambient: Sequence[Sequence[int]] = CARTAN_A4) -> IntMatrix:
        b = self.basis
        return tuple(
            tuple(sum(b[i][k] * ambient[k][l] * b[j][l]
                      for k in range(4) for l in range(4))
                  for j in range(4))
            for i in range(4)
        )

    def to_exact(self) -> ExactLattice:
        return ExactLattice.from_rows(self.basis)


def ssl_of(p: Icosian) -> CoordSublattice:
    """The similar sublattice p L twist(p), of norm scale nr(p) nr(p)' and
    lattice index (nr(p) nr(p)')^2."""
    if not p:
        raise ValueError("the zero icosian spans no sublattice")
    pt = p.twist()
    rows = [l_coords(p.quat * b * pt.quat) for b in L_BASIS]
    sub = CoordSublattice.from_rows(rows)
    assert sub.index == p.norm_quadruple() ** 2
    return sub


def l_of_ideal(q: Icosian) -> CoordSublattice:
    """The twist symmetrisation of the right ideal qI, as a sublattice of
    L: the Z-span of q*f + twist(q*f) over a Z-basis f of the ring."""
    if not q:
        raise ValueError("the zero ideal has no symmetrisation")
    rows = [l_coords(phi_plus(q.quat * f.quat)) for f in ZBASIS]
    return CoordSublattice.from_rows(rows)


_I4 = ExactLattice.from_rows([[int(i == j) for j in range(4)] for i in range(4)])


@dataclass(frozen=True)
class CslResult:
    """A coincidence rotation of A4 together with its CSL."""

    source: Icosian
    extension: ExtensionPair
    rotation: RotationMatrix
    lattice: CoordSublattice
    sigma: int


def _csl_by_intersection(ext: ExtensionPair) -> CoordSublattice:
    qe, qt, n = ext.extended.quat, ext.twisted.quat, ext.sigma
    rows = []
    for b in L_BASIS:
        img = qe * b * qt
        rows.append([c / n for c in l_coords_rational(img)])
    rotated = ExactLattice.from_rows(rows)
    meet = lattice_intersect(_I4, rotated)
    basis = []
    for row in meet.basis:
        assert all(x.denominator == 1 for x in row)
        basis.append([int(x) for x in row])
    sub = CoordSublattice.from_rows(basis)
    assert sub.index == lattice_index(meet, _I4)
    return sub


def csl_of(q: Icosian) -> CslResult:
    """Coincidence site lattice of the rotation induced by a primitive
    admissible icosian, computed along two independent routes that are
    required to agree: the symmetrised ideal of the norm-extended
    quaternion, and the lattice intersection L with R L.  The coincidence
    index equals the extension norm sigma = lcm(nr q, (nr q)')."""
    ext = q.extension()  # raises NotPrimitiveError / NotAdmissibleError
    from_ideal = l_of_ideal(ext.extended)
    from_meet = _csl_by_intersection(ext)
    assert from_ideal == from_meet, (
        f"ideal and intersection routes disagree for {q}")
    assert from_ideal.index == ext.sigma, (
        f"CSL index {from_ideal.index} != sigma {ext.sigma} for {q}")
    return CslResult(
        source=q,
        extension=ext,
        rotation=q.rotation(),
        lattice=from_ideal,
        sigma=ext.sigma,
    )


@dataclass(frozen=True)
class IrrationalDenominator:
    """Denominator of an orthogonal matrix of the shape sqrt(square) with
    a non-square positive integer under the root."""

    square: int

    def __str__(self) -> str:
        return f"sqrt({self.square})"


def denominator_of(q: Icosian) -> int | IrrationalDenominator:
    """Exact denominator of the orthogonal map x -> q x twist(q) / s on L,
    the least positive multiplier making the matrix integral.

    For admissible q the result is the integer s / gcd(s, content); for
    non-admissible q the true scale is an irrational square root and the
    result reports its square.
    """
    if not q:
        raise ValueError("the zero icosian induces no rotation")
    qt = q.twist()
    rows = [l_coords(q.quat * b * qt.quat) for b in L_BASIS]
    content = 0
    for row in rows:
        for x in row:
            content = gcd(content, x)
    n4 = q.norm_quadruple()
    s = isqrt(n4)
    if s * s == n4:
        return s // gcd(s, content)
    assert n4 % (content * content) == 0
    return IrrationalDenominator(n4 // (content * content))
