import random
from fractions import Fraction

import pytest

from sigma1.combinators import (ComplementData, SubspaceQ,
                                coordinate_subspace, fg_normal_test,
                                join_test, max_corank, product_complement,
                                simultaneous_supplement, wreath_complement)
from sigma1.errors import PreconditionError
from sigma1.regions import (Direction, EmptyRegion, SubsphereComplementRegion,
                            all_region)
from sigma1 import _linalg


def f2_complement(n=2):
    """Free-of-rank-2 factor: the complement is the entire 1-sphere,
    encoded as the subsphere of the zero subspace."""
    return ComplementData.everything(n)


def test_product_f2_x_f2():
    region = product_complement(f2_complement(), f2_complement())
    assert isinstance(region, SubsphereComplementRegion)
    assert region.n == 4
    subs = set(region.subspheres)
    assert subs == {((1, 0, 0, 0), (0, 1, 0, 0)),
                    ((0, 0, 1, 0), (0, 0, 0, 1))}
    assert region.contains(Direction((1, 0, 1, 0)))
    assert not region.contains(Direction((0, 0, 1, 0)))
    assert not region.contains(Direction((1, 1, 0, 0)))


def test_product_bs_x_bs_two_points():
    bs = ComplementData.make(1, points=[(1,)])
    region = product_complement(bs, bs)
    assert region.subspheres == ()
    assert set(p.vector for p in region.complement_points) == \
        {(1, 0), (0, 1)}
    assert not region.contains(Direction((1, 0)))
    assert region.contains(Direction((-1, 0)))
    assert region.contains(Direction((1, 1)))


def test_product_c_x_f2_equator():
    c_inf = ComplementData.empty(1)
    region = product_complement(c_inf, f2_complement())
    assert region.subspheres == (((1, 0, 0),),)
    assert not region.contains(Direction((0, 1, -1)))
    assert region.contains(Direction((1, 0, 0)))


def test_product_membership_pointwise():
    rng = random.Random(83)
    c1 = ComplementData.make(2, [[(1, 0)]], [(0, 1)])
    c2 = ComplementData.make(2, [], [(1, 1), (-1, 0)])
    region = product_complement(c1, c2)
    for _ in range(200):
        v = tuple(rng.randint(-3, 3) for _ in range(4))
        if all(x == 0 for x in v):
            continue
        d = Direction.from_vector(v)
        d1, d2 = v[:2], v[2:]
        in_c = False
        if all(x == 0 for x in d2) and \
                c1.contains_direction(Direction.from_vector(d1)):
            in_c = True
        if all(x == 0 for x in d1) and \
                c2.contains_direction(Direction.from_vector(d2)):
            in_c = True
        assert region.contains(d) == (not in_c), v


def test_wreath_examples():
    # Z wr Z: complement is the 0-subsphere of directions killing the base
    region = wreath_complement(1, 1)
    assert region.subspheres == (((1, 0),),)
    assert not region.contains(Direction((0, 1)))
    assert not region.contains(Direction((0, -1)))
    assert region.contains(Direction((1, 0)))
    assert region.contains(Direction((2, 1)))
    # lamplighter: base abelianization finite -> empty invariant
    assert wreath_complement(0, 1) == EmptyRegion(0)
    # base only: invariant is everything
    assert wreath_complement(2, 0) == all_region(1)
    assert wreath_complement(0, 0) == EmptyRegion(-1)
    # iterated wreath with m-1 base coordinates
    region = wreath_complement(3, 1)
    assert region.subspheres == (((1, 0, 0, 0), (0, 1, 0, 0),
                                  (0, 0, 1, 0)),)


def test_wreath_complement_antipode_stable():
    from sigma1.regions import antipode
    region = wreath_complement(2, 2)
    assert antipode(region) == region


def test_join_examples():
    assert join_test([True], {})
    assert not join_test([True, True], {(0, 1): [0]})
    assert join_test([True, True], {(0, 1): [0, Fraction(1, 2)]})
    assert not join_test([True, False], {(0, 1): [1]})
    with pytest.raises(PreconditionError):
        join_test([], {})


def test_join_matches_raag_on_path_edges():
    # decompose a path graph group into its edge subgroups with a
    # nowhere-zero character: every edge subgroup is free abelian of rank 2
    # (member), intersections are the shared vertices
    from sigma1.raag import path_graph, raag_point_test
    rng = random.Random(89)
    g = path_graph(4)
    edges = sorted(tuple(sorted(e)) for e in g.edges)
    for _ in range(40):
        chi = [Fraction(rng.randint(-3, 3)) for _ in range(4)]
        if not all(chi):
            continue
        flags = [True] * len(edges)  # rank-2 abelian pieces, chi nonzero
        witnesses = {}
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                shared = set(edges[i]) & set(edges[j])
                if shared:
                    witnesses[(i, j)] = [chi[v] for v in shared]
        assert join_test(flags, witnesses) == raag_point_test(g, chi)


def test_fg_normal_examples():
    u1 = [(0, 0, 1, 0), (0, 0, 0, 1)]
    u2 = [(1, 0, 0, 0), (0, 1, 0, 0)]
    n_img = [(1, 0, 1, 0), (0, 1, 0, 1)]
    assert fg_normal_test([u1, u2], n_img, 4)
    assert not fg_normal_test([u1, u2], [], 4)
    assert fg_normal_test([], [], 4)
    full = [(1, 0), (0, 1)]
    assert fg_normal_test([[(1, 0)], full], full, 2)


def test_max_corank_and_supplement():
    u1 = [(1, 0, 0, 0), (0, 1, 0, 0)]
    u2 = [(0, 0, 1, 0), (0, 0, 0, 1)]
    assert max_corank([u1, u2], 4) == 2
    supp = simultaneous_supplement([u1, u2], 4)
    assert supp.dim == 2
    for u in (u1, u2):
        assert _linalg.stack_rank(supp.basis, u) == 4
    line = simultaneous_supplement([[(1, 0)]], 2)
    assert supp is not None
    assert line.basis == ((1, 1),)
    full = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    zero = simultaneous_supplement([full], 3)
    assert zero.dim == 0
    assert max_corank([full], 3) == 3
    with pytest.raises(PreconditionError):
        simultaneous_supplement([], 3)


def test_supplement_random_posthoc_checks():
    rng = random.Random(97)
    for _ in range(40):
        n = rng.randint(2, 5)
        k = rng.randint(1, 3)
        subs = []
        for _ in range(k):
            rows = [[rng.randint(-2, 2) for _ in range(n)]
                    for _ in range(rng.randint(1, n))]
            sub = SubspaceQ(n, tuple(map(tuple, rows)))
            if sub.dim == 0:
                continue
            subs.append(sub)
        if not subs:
            continue
        m = min(s.dim for s in subs)
        supp = simultaneous_supplement(subs, n)
        assert supp.dim == n - m
        for s in subs:
            assert _linalg.stack_rank(supp.basis, s.basis) == n


def test_coordinate_subspace_and_region_roundtrip():
    u = coordinate_subspace(4, [0, 2])
    assert u.basis == ((1, 0, 0, 0), (0, 0, 1, 0))
    data = ComplementData.make(4, [u], [(1, 1, 1, 1)])
    region = data.to_region()
    assert not region.contains(Direction((0, 1, 0, 1)))
    assert not region.contains(Direction((1, 1, 1, 1)))
    assert region.contains(Direction((1, 0, 0, 0)))
