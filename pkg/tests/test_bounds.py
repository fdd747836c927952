import random
from fractions import Fraction

import pytest

from sigma1.bounds import (big_psi_full_circle, big_psi_point_test,
                           emptiness_by_deficiency, proper_power_root,
                           psi_full_circle, psi_point_test, sym_closure,
                           wirtinger_graphs, wirtinger_relators)
from sigma1.brown import brown_full_circle, brown_point_test
from sigma1.errors import InvalidCharacterError, PreconditionError
from sigma1.raag import path_graph, raag_point_test, raag_presentation
from sigma1.regions import ArcUnionRegion, Direction, paint_region
from sigma1.words import (Word, invert, parse_presentation, parse_word)

from _helpers import (random_character, random_rank2_relator,
                      random_two_gen_relator)

ABC = ("a", "b", "c")
B24_R1 = parse_word("a c a c b c a^-1 b^-1 c^-3", ABC)
B24_R2 = parse_word("a c^-1 a^-1 b^-2 c^-1 b c b^2 c", ABC)


def test_sym_closure_examples():
    comm = parse_word("a b a^-1 b^-1", ("a", "b"))
    closed = sym_closure((comm,))
    assert len(closed) == 2
    assert invert(comm) in closed
    r = parse_word("a b", ("a", "b"))
    assert len(sym_closure((r, invert(r)))) == 2
    assert sym_closure(()) == ()
    with pytest.raises(PreconditionError):
        sym_closure((parse_word("a b a^-1", ("a", "b")),))


def test_psi_b24_positive_point():
    res = psi_point_test((B24_R1, B24_R2), (0, 0, 1), 3)
    assert res.member
    assert res.t == (2, 1)  # the third generator
    # both zero generators have adjacent-double-minimum witnesses
    assert ("zero", 0) in res.witnesses and ("zero", 1) in res.witnesses


def test_psi_b24_negative_point():
    res = psi_point_test((B24_R1, B24_R2), (0, 0, -1), 3)
    assert not res.member
    res = psi_point_test((B24_R1, B24_R2), (0, 0, -1), 3, symmetrize=False)
    assert not res.member


def test_psi_wreath_style_relator_minimum_at_end():
    r = parse_word("h q h q^-1 h^-1 q h^-1 q^-1", ("h", "q"))
    res = psi_point_test((r,), (1, 1), 2)
    assert res.member
    wit = res.witnesses[(1, 1)] if (1, 1) in res.witnesses else \
        next(iter(res.witnesses.values()))
    assert wit.positions == (8,)  # unique minimum at the end of the word


def test_psi_empty_relator_set():
    assert not psi_point_test((), (1, 1), 2).member


def test_psi_invalid_characters():
    with pytest.raises(InvalidCharacterError):
        psi_point_test((B24_R1,), (0, 0, 0), 3)
    with pytest.raises(InvalidCharacterError):
        psi_point_test((B24_R1,), (1, 0, 0), 3)


def test_big_psi_path_raag_points():
    p = raag_presentation(path_graph(3))
    assert not big_psi_point_test(p.relators, (1, 0, 1), 3).member
    assert big_psi_point_test(p.relators, (1, 1, 1), 3).member


def test_big_psi_b214_axis_points_excluded():
    p = parse_presentation(
        "< a b c | a b a^-1 b^-1 , "
        "a c^2 b c^-1 a^-1 b c^-1 b c^2 a c b^-1 c^-2 a^-1 c^-2 b^-1 c >")
    rels = p.relators
    # characters vanish on b; the four axis points in (a, c)
    for chi in ((0, 0, 1), (0, 0, -1), (1, 0, 0), (-1, 0, 0)):
        assert not big_psi_point_test(rels, chi, 3).member, chi
    # the region is two open arcs inside the second and fourth quadrants
    # of the (a, c) coordinate circle
    region = big_psi_full_circle(p)
    assert isinstance(region, ArcUnionRegion)
    arcs, points = region.arcs_and_points()
    assert points == []
    assert len(arcs) == 2
    quadrant_signs = set()
    for a, b, fc, tc in arcs:
        assert not fc and not tc
        mid = Direction.from_vector(tuple(x + y for x, y in
                                          zip(a.vector, b.vector)))
        quadrant_signs.add((mid.vector[0] > 0, mid.vector[1] > 0))
    assert quadrant_signs == {(True, False), (False, True)}


def test_psi_full_circle_matches_brown_on_b28():
    p = parse_presentation(
        "< a b | a^-1 b^-1 a b^2 a^-1 b^-1 a^2 b^-1 a^-1 b a^-1 b a b^-1 >")
    region_psi = psi_full_circle(p)
    region_brown = brown_full_circle(p.relators[0])
    assert region_psi == region_brown
    expected = paint_region(
        (Direction((1, 0)), Direction((0, 1)), Direction((-1, -1))),
        (False, False, False), (True, True, False))
    assert region_psi == expected


def _b210_family(m):
    gens = ("a", "b")
    rm = parse_word("a^%d b a^-%d b a^%d b^-1 a^-%d b^-1"
                    % (m + 1, m + 1, m, m), gens)
    rm1 = parse_word("a^%d b a^-%d b a^%d b^-1 a^-%d b^-1"
                     % (m + 2, m + 2, m + 1, m + 1), gens)
    r3 = parse_word("a b a^%d b a^-%d b^-1 a^-1 b a^%d b^-1 a^-%d b^-1"
                    % (m, m, m + 1, m + 1), gens)
    r4 = parse_word("a^%d b a^-%d b a^-1 b^-1 a^%d b^-1 a^-%d b a b^-1"
                    % (m + 1, m + 1, m + 2, m + 2), gens)
    pres = parse_presentation("< a b | >")
    pres = type(pres)(gens, (rm, rm1))
    return pres, (rm, rm1, r3, r4)


def test_psi_full_circle_b210_family():
    pres, rels = _b210_family(2)
    region = psi_full_circle(pres, relators=rels)
    expected = paint_region((Direction((1, 0)), Direction((-1, -1))),
                            (False, False), (True, True))
    assert region == expected


def test_full_circle_needs_rank_two():
    p = parse_presentation("< a b c | a b a^-1 b^-1, b c b^-1 c^-1, "
                           "a c a^-1 c^-1 >")
    with pytest.raises(PreconditionError):
        psi_full_circle(p)  # rank 3


def test_bound_regions_are_open():
    rng = random.Random(31)
    for _ in range(8):
        r = random_rank2_relator(rng, max_len=12)
        pres = parse_presentation("< a b | >")
        pres = type(pres)(("a", "b"), (r,))
        for region in (psi_full_circle(pres), big_psi_full_circle(pres)):
            if isinstance(region, ArcUnionRegion):
                arcs, points = region.arcs_and_points()
                assert points == []
                for a, b, fc, tc in arcs:
                    assert not fc and not tc


def test_wirtinger_trefoil():
    beta = [2, 0, 1]
    sigma = [-1, -1, -1]
    gp, gm, fp, fm = wirtinger_graphs(3, beta, sigma)
    assert fp and fm
    assert len(gp.vertices) == 3 and len(gp.edges) == 3
    assert len(gm.vertices) == 3 and len(gm.edges) == 3
    # cross-check against the refined point test on the actual presentation
    rels = wirtinger_relators(3, beta, sigma)
    assert big_psi_point_test(rels, (1, 1, 1), 3).member == fp
    assert big_psi_point_test(rels, (-1, -1, -1), 3).member == fm
    # and against the two-generator trefoil presentation
    trefoil = parse_word("a b a b^-1 a^-1 b^-1", ("a", "b"))
    assert brown_point_test(trefoil, (1, 1)) == fp
    assert brown_point_test(trefoil, (-1, -1)) == fm


def test_wirtinger_degenerate_single_crossing():
    gp, gm, fp, fm = wirtinger_graphs(1, [0], [1])
    assert fp and fm
    assert len(gp.vertices) == 1


def test_wirtinger_graph_shape_property():
    rng = random.Random(37)
    for _ in range(50):
        m = rng.randint(1, 7)
        beta = [rng.randrange(m) for _ in range(m)]
        sigma = [rng.choice((1, -1)) for _ in range(m)]
        gp, gm, fp, fm = wirtinger_graphs(m, beta, sigma)
        assert len(gp.vertices) == m and len(gp.edges) == m
        assert len(gm.vertices) == m and len(gm.edges) == m
        from sigma1.words import is_cyclically_reduced
        rels = wirtinger_relators(m, beta, sigma)
        if all(is_cyclically_reduced(r) and len(r) == 4 for r in rels):
            got_p = big_psi_point_test(rels, (1,) * m, m).member
            got_m = big_psi_point_test(rels, (-1,) * m, m).member
            assert got_p == fp and got_m == fm


def test_proper_power_root():
    w = parse_word("a b a b a b", ("a", "b"))
    root, k = proper_power_root(w)
    assert root.letters == ((0, 1), (1, 1)) and k == 3
    assert proper_power_root(parse_word("a b", ("a", "b"))) is None


def test_deficiency_examples():
    assert emptiness_by_deficiency(
        parse_presentation("< a b c | a b c >")).case == 1
    surface = parse_presentation(
        "< a1 b1 a2 b2 | a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1 >")
    assert emptiness_by_deficiency(surface).case == 1
    both_powers = parse_presentation(
        "< x y | x y x^-1 y^-1 x y x^-1 y^-1 , y^4 >")
    cert = emptiness_by_deficiency(both_powers)
    assert cert.case == 3 and cert.prime == 2
    assert cert.exponents == (2, 4)
    one_power = parse_presentation("< x y | y^6 >")
    cert = emptiness_by_deficiency(one_power)
    assert cert.case == 2 and cert.prime == 2
    assert emptiness_by_deficiency(
        parse_presentation("< a b | a b a^-1 b^-1 >")) is None


def test_inclusion_chain_psi_bigpsi_brown():
    rng = random.Random(41)
    checked = 0
    while checked < 120:
        r = random_two_gen_relator(rng, max_len=12)
        from sigma1.words import exponent_vector
        ev = exponent_vector(r, 2)
        values = random_character(rng, 2)
        if values[0] * ev[0] + values[1] * ev[1] != 0:
            continue
        checked += 1
        psi = psi_point_test((r,), values, 2).member
        big = big_psi_point_test((r,), values, 2).member
        if psi:
            assert big
        if big:
            assert brown_point_test(r, values)


def test_monotonicity_in_relator_set():
    rng = random.Random(43)
    checked = 0
    while checked < 60:
        r1 = random_rank2_relator(rng, max_len=10)
        r2 = random_rank2_relator(rng, max_len=10)
        values = random_character(rng, 2)
        checked += 1
        if psi_point_test((r1,), values, 2).member:
            assert psi_point_test((r1, r2), values, 2).member
        if big_psi_point_test((r1,), values, 2).member:
            assert big_psi_point_test((r1, r2), values, 2).member


def test_point_test_scaling_and_rotation_invariance():
    rng = random.Random(47)
    from sigma1.words import cyclic_permutation
    for _ in range(40):
        r = random_rank2_relator(rng, max_len=12)
        values = random_character(rng, 2)
        base = psi_point_test((r,), values, 2).member
        q = Fraction(7, 3)
        scaled = tuple(v * q for v in values)
        assert psi_point_test((r,), scaled, 2).member == base
        k = rng.randrange(len(r))
        rot = cyclic_permutation(r, k)
        assert psi_point_test((rot,), values, 2).member == base
        assert psi_point_test((invert(r),), values, 2).member == base


def test_big_psi_matches_raag_on_small_graphs():
    rng = random.Random(53)
    from sigma1.raag import SimpleGraph
    for _ in range(12):
        n = rng.randint(2, 6)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < 0.5]
        g = SimpleGraph.from_edges(n, edges)
        pres = raag_presentation(g)
        for _ in range(40):
            chi = random_character(rng, n)
            got = big_psi_point_test(pres.relators, chi, n).member
            want = raag_point_test(g, chi)
            assert got == want, (n, sorted(map(sorted, edges)), chi)
