import random
from fractions import Fraction

import pytest

from sigma1.brown import (OneRelatorClass, brown_full_circle,
                          brown_point_test, classify_one_relator,
                          convex_hull, one_relator_region,
                          relator_to_lattice_path)
from sigma1.bounds import psi_point_test
from sigma1.errors import PreconditionError
from sigma1.regions import ArcUnionRegion, AllRegion, Direction, paint_region
from sigma1.words import (cyclic_permutation, invert, parse_presentation,
                          parse_word)

from _helpers import random_rank2_relator

GENS = ("a", "b")
B28 = "a^-1 b^-1 a b^2 a^-1 b^-1 a^2 b^-1 a^-1 b a^-1 b a b^-1"


def test_classification_examples():
    assert classify_one_relator(parse_presentation("< a b c | a b c >")) is \
        OneRelatorClass.MANY_GENS_EMPTY
    assert classify_one_relator(parse_presentation("< a b | a^3 >")) is \
        OneRelatorClass.FREE_PRODUCT_EMPTY
    assert classify_one_relator(parse_presentation(
        "< a b | a^2 b^2 a b^-2 a^-1 b a^-1 b^-2 a b^2 >")) is \
        OneRelatorClass.TWO_GEN_BOTH_LETTERS
    assert classify_one_relator(parse_presentation("< a | a^5 >")) is \
        OneRelatorClass.CYCLIC
    assert classify_one_relator(parse_presentation("< a b | a >")) is \
        OneRelatorClass.CYCLIC
    assert classify_one_relator(parse_presentation("< a b | >")) is \
        OneRelatorClass.FREE_GROUP
    with pytest.raises(PreconditionError):
        classify_one_relator(parse_presentation("< a b | a, b >"))


def test_point_test_r20_both_directions():
    r20 = parse_word("a^2 b^2 a b^-2 a^-1 b a^-1 b^-2 a b^2", GENS)
    assert brown_point_test(r20, (1, -2))
    assert brown_point_test(r20, (-1, 2))


def test_point_test_r21_both_directions():
    r21 = parse_word(
        "a^2 b a^-1 b^-2 a^-1 b a^-1 b^-1 a b^2 a b^-1 a b^2 a b^-1 "
        "a^-1 b a^-1 b^-2 a^-1 b", GENS)
    assert brown_point_test(r21, (1, 0))
    assert brown_point_test(r21, (-1, 0))


def test_point_test_trefoil():
    trefoil = parse_word("a b a b^-1 a^-1 b^-1", GENS)
    from sigma1.characters import track
    assert [int(x) for x in track(trefoil, (1, 1))] == [1, 2, 3, 2, 1, 0]
    assert brown_point_test(trefoil, (1, 1))
    assert brown_point_test(trefoil, (-1, -1))


def test_point_test_preconditions():
    r = parse_word("a b a^-1 b^-1", GENS)
    with pytest.raises(PreconditionError):
        brown_point_test(parse_word("a b b^-1 a", GENS), (1, -1))
    with pytest.raises(PreconditionError):
        brown_point_test(parse_word("a^3", GENS), (0, 1))
    with pytest.raises(PreconditionError):
        brown_point_test(r, (0, 0))
    r20 = parse_word("a^2 b^2 a b^-2 a^-1 b a^-1 b^-2 a b^2", GENS)
    with pytest.raises(PreconditionError):
        brown_point_test(r20, (1, 1))


def test_lattice_path_commutator():
    path = relator_to_lattice_path(parse_word("a b a^-1 b^-1", GENS))
    assert path.vertices == ((0, 0), (1, 0), (1, 1), (0, 1), (0, 0))


def test_lattice_path_b28():
    path = relator_to_lattice_path(parse_word(B28, GENS))
    assert len(path.vertices) == 17
    assert path.vertices[0] == path.vertices[-1] == (0, 0)


def test_lattice_path_positive_word_example():
    u = "a^2 b a b^3 a^3"
    v = "b a b a^4 b a b"
    r = parse_word(u, GENS) * invert(parse_word(v, GENS))
    path = relator_to_lattice_path(r)
    inner = path.interior_vertices()
    assert path.vertices[10] == (6, 4)
    assert inner.count((6, 4)) == 1
    assert inner.count((0, 0)) == 1


def test_lattice_path_requires_zero_sums():
    with pytest.raises(PreconditionError):
        relator_to_lattice_path(parse_word("a b", GENS))


def test_convex_hull_orientation():
    hull = convex_hull([(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)])
    assert set(hull) == {(0, 0), (1, 0), (1, 1), (0, 1)}
    i = hull.index((0, 0))
    assert hull[(i + 1) % 4] == (1, 0)  # counterclockwise


def test_full_circle_b28_region():
    region = brown_full_circle(parse_word(B28, GENS))
    expected = paint_region(
        (Direction((1, 0)), Direction((0, 1)), Direction((-1, -1))),
        (False, False, False), (True, True, False))
    assert region == expected
    # the merged second arc passes through (-1, 0), which is a member
    assert region.contains(Direction((-1, 0)))
    assert region.contains(Direction((-2, -1)))
    assert not region.contains(Direction((-1, -2)))
    assert not region.contains(Direction((0, 1)))


def test_full_circle_commutator_is_all():
    assert brown_full_circle(parse_word("a b a^-1 b^-1", GENS)) == \
        AllRegion(1)


def test_full_circle_positive_word_contains_q1_q3():
    u = "a^2 b a b^3 a^3"
    v = "b a b a^4 b a b"
    r = parse_word(u, GENS) * invert(parse_word(v, GENS))
    from sigma1.words import cyclically_reduce
    core, _ = cyclically_reduce(r)
    region = brown_full_circle(core)
    for d in ((1, 1), (1, 2), (3, 1), (-1, -1), (-1, -2), (-3, -1)):
        assert region.contains(Direction(d)), d


def test_one_relator_region_rank_one():
    p = parse_presentation("< a b | a^2 b^2 a b^-2 a^-1 b a^-1 b^-2 a b^2 >")
    region = one_relator_region(p)
    assert region.dim == 0
    assert len(region.points) == 2  # both sphere points are members


def test_point_test_invariances():
    rng = random.Random(17)
    for _ in range(60):
        r = random_rank2_relator(rng, max_len=12)
        num = (rng.randint(-3, 3), rng.randint(-3, 3))
        if num == (0, 0):
            num = (1, 1)
        chi = (Fraction(num[0]), Fraction(num[1]))
        base = brown_point_test(r, chi)
        k = rng.randrange(len(r))
        assert brown_point_test(cyclic_permutation(r, k), chi) == base
        assert brown_point_test(invert(r), chi) == base
        q = Fraction(rng.randint(1, 5), rng.randint(1, 5))
        assert brown_point_test(r, (chi[0] * q, chi[1] * q)) == base


def test_full_circle_arc_sampling_soundness():
    # the constancy claim: on every cell of the swept circle, the point
    # test agrees with the cell's label (probed at many random directions,
    # which in particular hit interior points of every arc)
    rng = random.Random(23)
    for _ in range(12):
        r = random_rank2_relator(rng, max_len=16)
        region = brown_full_circle(r)
        for _ in range(40):
            v = (rng.randint(-9, 9), rng.randint(-9, 9))
            if v == (0, 0):
                continue
            d = Direction.from_vector(v)
            got = brown_point_test(r, (Fraction(v[0]), Fraction(v[1])))
            if isinstance(region, ArcUnionRegion):
                kind, i = region._locate(d)
                label = region.boundary_in[i] if kind == "boundary" \
                    else region.arc_in[i]
                assert got == label
            else:
                assert got == region.contains(d)


def test_psi_agreement_on_random_directions():
    rng = random.Random(29)
    for _ in range(10):
        r = random_rank2_relator(rng, max_len=12)
        region = brown_full_circle(r)
        for _ in range(20):
            v = (rng.randint(-5, 5), rng.randint(-5, 5))
            if v == (0, 0):
                continue
            d = Direction.from_vector(v)
            member = psi_point_test((r,), (Fraction(v[0]), Fraction(v[1])),
                                    2).member
            assert region.contains(d) == member
