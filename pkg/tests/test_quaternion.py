import random

import pytest

from a4csl.golden import GoldenInt, GoldenRat, TAU
from a4csl.quaternion import (
    QUAT_ONE,
    Quat,
    parse_quat,
    rotation_matrix,
)


def rnd_rat(rng, bound=6):
    return GoldenRat.make(
        GoldenInt(rng.randint(-bound, bound), rng.randint(-bound, bound)),
        rng.randint(1, 4),
    )


def rnd_quat(rng, bound=6):
    return Quat(*(rnd_rat(rng, bound) for _ in range(4)))


def test_hamilton_table():
    i = Quat.of(0, 1, 0, 0)
    j = Quat.of(0, 0, 1, 0)
    k = Quat.of(0, 0, 0, 1)
    assert i * j == k and j * k == i and k * i == j
    assert j * i == -k and k * j == -i and i * k == -j
    assert i * i == j * j == k * k == -QUAT_ONE


def test_nr_multiplicative_and_tr_linear():
    rng = random.Random(5)
    for _ in range(200):
        p, q = rnd_quat(rng), rnd_quat(rng)
        assert (p * q).nr() == p.nr() * q.nr()
        assert (p + q).tr() == p.tr() + q.tr()
        assert p * p.conj() == Quat.of(p.nr(), 0, 0, 0)


def test_twist_example():
    # twist of (1-t)/2 + (t/2)i + 0j + (1/2)k swaps and conjugates
    q = Quat(
        GoldenRat.make(GoldenInt(1, -1), 2),
        GoldenRat.make(GoldenInt(0, 1), 2),
        GoldenRat.make(GoldenInt(0, 0), 1),
        GoldenRat.make(GoldenInt(1, 0), 2),
    )
    expected = Quat(
        GoldenRat.make(GoldenInt(0, 1), 2),
        GoldenRat.make(GoldenInt(1, -1), 2),
        GoldenRat.make(GoldenInt(1, 0), 2),
        GoldenRat.make(GoldenInt(0, 0), 1),
    )
    assert q.twist() == expected


def test_twist_involution_and_antimultiplicative():
    rng = random.Random(7)
    for _ in range(300):
        p, q = rnd_quat(rng), rnd_quat(rng)
        assert p.twist().twist() == p
        assert (p * q).twist() == q.twist() * p.twist()
        assert (p + q).twist() == p.twist() + q.twist()
        assert p.twist().nr() == p.nr().conj()


def test_inverse():
    rng = random.Random(11)
    for _ in range(100):
        q = rnd_quat(rng)
        if not q:
            continue
        assert q * q.inverse() == QUAT_ONE
        assert q.inverse() * q == QUAT_ONE


def test_parse_roundtrip():
    rng = random.Random(13)
    for _ in range(100):
        q = rnd_quat(rng)
        assert parse_quat(str(q)) == q


def test_rotation_matrix_identity():
    m = rotation_matrix(QUAT_ONE, 1)
    for i in range(4):
        for j in range(4):
            want = GoldenRat.make(GoldenInt(int(i == j), 0), 1)
            assert m.entries[i][j] == want


def test_rotation_matrix_orthogonal_det_one():
    # q = 1 + i is twist-fixed with nr = 2, so scale = 2
    q = Quat.of(1, 1, 0, 0)
    m = rotation_matrix(q, 2)
    assert m.is_orthogonal()
    assert m.det() == GoldenRat.make(GoldenInt(1, 0), 1)
    # the image of 1 is q*1*q/2 = i
    assert m.apply(QUAT_ONE) == Quat.of(0, 1, 0, 0)


def test_rotation_matrix_rejects_bad_scale():
    q = Quat.of(1, 1, 0, 0)
    with pytest.raises(ValueError):
        rotation_matrix(q, 3)
    with pytest.raises(ValueError):
        rotation_matrix(q, 1)


def test_rotation_preserves_norm_sampled():
    rng = random.Random(17)
    # build admissible quaternions q with rational nr by symmetrizing
    for _ in range(20):
        x = rnd_quat(rng, 3)
        q = x + x.twist()  # twist-fixed, nr rational
        if not q:
            continue
        n2 = q.nr() * q.twist().nr()
        # nr(q) is rational so the scale is nr(q) itself if integral
        nr = q.nr()
        if not nr.is_rational():
            continue
        num, den = nr.num.a, nr.den
        if den != 1:
            continue
        m = rotation_matrix(q, abs(num))
        for _ in range(5):
            v = rnd_quat(rng, 3)
            assert m.apply(v).nr() == v.nr()
