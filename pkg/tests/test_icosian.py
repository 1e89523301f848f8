import random
from fractions import Fraction

import pytest

from a4csl.golden import ONE, RAT_ONE, TAU, GoldenInt
from a4csl.icosian import (
    ICOSIAN_BASIS,
    TRACE_GRAM,
    ZBASIS,
    Icosian,
    NotAdmissibleError,
    NotPrimitiveError,
    basis_coordinates,
    enumerate_by_trace_norm,
    norm_one_units,
    nr_zcoords,
)
from a4csl.lattice import _rat_inverse
from a4csl.quaternion import Quat


def test_half_vector_membership():
    q = Quat.of(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
    v = Icosian.from_quat(q)
    assert v.coords == (GoldenInt(0, 0), GoldenInt(0, 0), GoldenInt(1, 0), GoldenInt(0, 0))


def test_half_one_one_is_not_icosian():
    q = Quat.of(Fraction(1, 2), Fraction(1, 2), 0, 0)
    with pytest.raises(ValueError):
        Icosian.from_quat(q)


def test_basis_coordinates_roundtrip():
    rng = random.Random(211)
    for _ in range(30):
        zc = [rng.randint(-4, 4) for _ in range(8)]
        v = Icosian.from_zcoords(zc)
        assert v.zcoords() == tuple(zc)
        assert Icosian.from_quat(v.quat) == v
        xs = basis_coordinates(v.quat)
        assert all(x.is_integral() for x in xs)


def test_ring_closed_under_multiplication_conj_twist():
    rng = random.Random(223)
    for _ in range(25):
        v = Icosian.from_zcoords([rng.randint(-2, 2) for _ in range(8)])
        w = Icosian.from_zcoords([rng.randint(-2, 2) for _ in range(8)])
        product = v * w  # from_quat raises if the product left the ring
        assert product.quat == v.quat * w.quat
        assert v.conj().quat == v.quat.conj()
        assert v.twist().quat == v.quat.twist()


def test_trace_gram_has_half_integral_entry():
    assert TRACE_GRAM[0][3] == Fraction(1, 2)
    assert all(TRACE_GRAM[i][i] == 2 for i in range(4))


def test_nr_zcoords_matches_quaternion_norm():
    rng = random.Random(227)
    for _ in range(40):
        zc = [rng.randint(-3, 3) for _ in range(8)]
        v = Icosian.from_zcoords(zc)
        assert nr_zcoords(zc) == v.quat.nr().as_golden_int()


def box_count_trace_norm(t):
    """Independent shell count: full box enumeration of Z^8 coordinates,
    using the doubled (hence integral) Gram matrix and running sums."""
    g2 = [[int(2 * TRACE_GRAM[i][j]) for j in range(8)] for i in range(8)]
    assert all(Fraction(g2[i][j], 2) == TRACE_GRAM[i][j]
               for i in range(8) for j in range(8))
    ginv = _rat_inverse(TRACE_GRAM)
    bounds = []
    for i in range(8):
        r = t * ginv[i][i]
        b = 0
        while (b + 1) * (b + 1) <= r:
            b += 1
        bounds.append(b)

    target = 2 * t
    count = 0
    x = [0] * 8

    def rec(i, partial):
        nonlocal count
        if i == 8:
            if partial == target:
                count += 1
            return
        row = g2[i]
        for xi in range(-bounds[i], bounds[i] + 1):
            x[i] = xi
            contrib = row[i] * xi * xi + 2 * xi * sum(
                row[j] * x[j] for j in range(i))
            rec(i + 1, partial + contrib)
        x[i] = 0

    rec(0, 0)
    return count


@pytest.mark.parametrize("t", [1, 2, 3])
def test_shell_sizes_against_box_enumeration(t):
    assert len(enumerate_by_trace_norm(t)) == box_count_trace_norm(t)


def test_unit_group_has_order_120():
    units = norm_one_units()
    assert len(units) == 120
    assert len({u.zcoords() for u in units}) == 120
    for u in units:
        assert u.nr() == ONE
        assert u.is_unit()
    # closed under multiplication
    rng = random.Random(229)
    keys = {u.zcoords() for u in units}
    for _ in range(50):
        a, b = rng.choice(units), rng.choice(units)
        assert (a * b).zcoords() in keys


def test_odd_shell_is_nonempty():
    shell = enumerate_by_trace_norm(3)
    assert len(shell) == 240
    for v in shell[:10]:
        assert v.trace_norm() == 3


def test_right_ideal_equality():
    p = Icosian.from_quat(Quat.of(1, 1, 0, 0))
    q = Icosian.from_quat(Quat.of(1, -1, 0, 0))
    r = Icosian.from_quat(Quat.of(2, 0, 0, 0))
    assert p.right_ideal_equal(q)
    assert q.right_ideal_equal(p)
    assert not p.right_ideal_equal(r)
    assert p.ideal_index() == 16
    assert r.ideal_index() == 256


def test_primitivity():
    p = Icosian.from_quat(Quat.of(1, 1, 0, 0))
    assert p.is_primitive()
    assert not (p * GoldenInt(2, 0)).is_primitive()
    assert (p * TAU).is_primitive()  # unit content survives


def test_extension_trivial_case():
    p = Icosian.from_quat(Quat.of(1, 1, 0, 0))
    ext = p.extension()
    assert ext.alpha == ONE
    assert ext.sigma == 2
    assert ext.extended == p
    assert ext.twisted.quat == p.quat.twist()


def test_extension_rescales_norm_and_flips_sign():
    # q = tau*(1+i) has nr = 2*tau^2; the extension divides tau back out,
    # and because N(tau) = -1 the two rotations differ by a global sign.
    p = Icosian.from_quat(Quat.of(1, 1, 0, 0))
    q = p * TAU
    assert q.nr() == GoldenInt(2, 2)  # 2*tau^2
    ext = q.extension()
    assert ext.sigma == 2
    assert ext.alpha == GoldenInt(-1, 1)  # tau^{-1} = tau - 1
    assert ext.extended == p
    assert ext.extended.rotation() == -q.rotation()


def test_extension_sign_preserved_when_norm_of_alpha_positive():
    p = Icosian.from_quat(Quat.of(1, 1, 0, 0))
    q = p * GoldenInt(1, 1)  # tau^2 * (1+i), alpha = tau^{-2}, N(alpha) = 1
    ext = q.extension()
    assert ext.extended == p
    assert ext.extended.rotation() == q.rotation()


def test_extension_requires_primitive():
    p = Icosian.from_quat(Quat.of(2, 2, 0, 0))
    with pytest.raises(NotPrimitiveError):
        p.extension()


def test_non_admissible_icosian():
    shell = enumerate_by_trace_norm(5)
    golden_five = GoldenInt(2, 1)  # 2 + tau, norm 5
    witnesses = [v for v in shell if v.nr() == golden_five]
    assert witnesses, "2 + tau must be represented by the norm form"
    v = witnesses[0]
    assert v.norm_quadruple() == 5
    assert not v.is_admissible()
    with pytest.raises(NotAdmissibleError):
        v.scale()
    with pytest.raises(NotAdmissibleError):
        v.extension()


def test_admissible_rotation_is_special_orthogonal():
    rng = random.Random(233)
    found = 0
    for _ in range(5000):
        if found >= 8:
            break
        v = Icosian.from_zcoords([rng.randint(-2, 2) for _ in range(8)])
        if not v or not v.is_admissible():
            continue
        found += 1
        r = v.rotation()
        assert r.is_orthogonal()
        assert r.det() == RAT_ONE
    assert found >= 8


def test_zbasis_is_twist_and_conj_stable():
    for f in ZBASIS:
        f.twist()  # raises if not in the ring
        f.conj()
        assert f.twist().twist() == f


def test_basis_norms():
    assert [Icosian.from_quat(b).nr() for b in ICOSIAN_BASIS] == [
        GoldenInt(1, 0), GoldenInt(1, 0), GoldenInt(1, 0), GoldenInt(1, 0)]
