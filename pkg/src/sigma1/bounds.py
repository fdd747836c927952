"""Computable lower bounds for the invariant built from relator sets.

The point tests read cyclic-minimum data off relator tracks: a member
certificate names a positive letter t and, for every other positive
letter, a relator whose track has a unique cyclic minimum involving that
letter and t; generators with value zero instead need a relator whose
track bottoms out exactly twice, adjacently, with the zero letter in the
middle.  The refined test replaces the star on t by connectivity of a
graph on all positive letters.  Full-circle versions sweep the rank-2
character circle over a finite critical set, and a combinatorial builder
covers knot-diagram (Wirtinger) presentations.  Deficiency arguments give
outright emptiness certificates.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .characters import (Character, abelianization, as_rationals,
                         cyclic_min_stats, dot, track)
from .errors import InvalidCharacterError, PreconditionError
from .regions import Direction, region_from_sweep
from .words import (Word, exponent_vector, invert, is_cyclically_reduced)


def _inv_letter(letter):
    g, s = letter
    return (g, -s)


def sym_closure(relators):
    """Close under inversion, deduplicated; cyclic permutations are left
    implicit because all minimum counting is done on the cyclic index
    domain anyway."""
    out = []
    seen = set()
    for r in relators:
        if not is_cyclically_reduced(r):
            raise PreconditionError("relators must be cyclically reduced",
                                    module="bounds")
        for w in (r, invert(r)):
            if w.letters not in seen:
                seen.add(w.letters)
                out.append(w)
    return tuple(out)


@dataclass(frozen=True)
class MinWitness:
    """Cyclic-minimum data of one relator track at one character."""

    relator_index: int
    min_value: Fraction
    positions: tuple
    kind: str  # "unique" | "double" | "other"
    involved_pair: tuple = None  # (s_j^-1, s_{j+1}) for unique minima
    zero_triple: tuple = None  # (s_j, s_{j+1}, s_{j+2}) for adjacent doubles


def _min_witness(index, r, values):
    t = track(r, values)
    stats = cyclic_min_stats(t)
    k = len(r)
    if stats.multiplicity == 1:
        j = stats.positions[0]
        pair = (_inv_letter(r[j - 1]), r[j % k])
        return MinWitness(index, stats.min_value, stats.positions,
                          "unique", involved_pair=pair)
    if stats.multiplicity == 2 and stats.consecutive:
        p1, p2 = stats.positions
        j = p1 if (p1 % k) + 1 == p2 else p2
        triple = (r[j - 1], r[j % k], r[(j + 1) % k])
        return MinWitness(index, stats.min_value, stats.positions,
                          "double", zero_triple=triple)
    return MinWitness(index, stats.min_value, stats.positions, "other")


def _validate_character(relators, values, n_gens):
    if len(values) != n_gens:
        raise InvalidCharacterError(
            "character has %d values for %d generators"
            % (len(values), n_gens))
    if all(v == 0 for v in values):
        raise InvalidCharacterError("character must be nonzero")
    for r in relators:
        if dot(values, as_rationals(exponent_vector(r, n_gens))) != 0:
            raise InvalidCharacterError(
                "character does not kill a relator exponent vector")


def _positive_letters(values):
    out = []
    for g, v in enumerate(values):
        if v > 0:
            out.append((g, 1))
        elif v < 0:
            out.append((g, -1))
    return out


@dataclass(frozen=True)
class PsiPointResult:
    member: bool
    t: tuple = None
    witnesses: dict = field(default_factory=dict)


def psi_point_test(relators, chi, n_gens, symmetrize=True):
    """The basic lower-bound point test.

    Member iff some positive letter t has, for every other positive letter
    y, a relator with a unique cyclic minimum whose involved letters are
    {y, t}, and for every zero generator x a relator whose minimum is
    attained exactly twice at adjacent spots with middle subword
    t^-1 x^(+-1) t.
    """
    values = chi.values if isinstance(chi, Character) else as_rationals(chi)
    _validate_character(relators, values, n_gens)
    rels = sym_closure(relators) if symmetrize else tuple(relators)
    for r in rels:
        if not is_cyclically_reduced(r):
            raise PreconditionError("relators must be cyclically reduced",
                                    module="bounds")
    wits = [_min_witness(i, r, values) for i, r in enumerate(rels)]
    uniques = [w for w in wits if w.kind == "unique"]
    doubles = [w for w in wits if w.kind == "double"]
    y_pos = _positive_letters(values)
    x_zero = [g for g in range(n_gens) if values[g] == 0]
    for t in y_pos:
        chosen = {}
        ok = True
        for y in y_pos:
            if y == t:
                continue
            hit = next((w for w in uniques
                        if set(w.involved_pair) == {y, t}), None)
            if hit is None:
                ok = False
                break
            chosen[y] = hit
        if not ok:
            continue
        t_inv = _inv_letter(t)
        for x in x_zero:
            hit = next((w for w in doubles
                        if w.zero_triple[0] == t_inv
                        and w.zero_triple[2] == t
                        and w.zero_triple[1][0] == x), None)
            if hit is None:
                ok = False
                break
            chosen[("zero", x)] = hit
        if ok:
            return PsiPointResult(True, t, chosen)
    return PsiPointResult(False)


@dataclass(frozen=True)
class PsiGraph:
    """Finite graph on hashable vertex labels; edges are frozensets."""

    vertices: tuple
    edges: tuple

    def is_connected(self):
        if not self.vertices:
            return False
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            e = tuple(e)
            if len(e) == 1:
                continue
            u, v = e
            if u in adj and v in adj:
                adj[u].add(v)
                adj[v].add(u)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True)
class BigPsiPointResult:
    member: bool
    graph: PsiGraph
    zero_certs: dict


def big_psi_point_test(relators, chi, n_gens, symmetrize=True):
    """The refined lower-bound point test.

    Member iff the letter graph (vertices: positive letters; edges: pairs
    involved in unique cyclic minima) is connected, and every zero
    generator appears as the middle letter of some exactly-twice-adjacent
    minimum whose flanking letters are positive.
    """
    values = chi.values if isinstance(chi, Character) else as_rationals(chi)
    _validate_character(relators, values, n_gens)
    rels = sym_closure(relators) if symmetrize else tuple(relators)
    wits = [_min_witness(i, r, values) for i, r in enumerate(rels)]
    y_pos = _positive_letters(values)
    y_pos_set = set(y_pos)
    edges = []
    for w in wits:
        if w.kind != "unique":
            continue
        a, b = w.involved_pair
        assert a in y_pos_set and b in y_pos_set
        edges.append(frozenset((a, b)))
    graph = PsiGraph(tuple(y_pos), tuple(dict.fromkeys(edges)))
    zero_certs = {}
    ok = graph.is_connected()
    for x in (g for g in range(n_gens) if values[g] == 0):
        hit = next(
            (w for w in wits
             if w.kind == "double"
             and w.zero_triple[1][0] == x
             and _inv_letter(w.zero_triple[0]) in y_pos_set
             and w.zero_triple[2] in y_pos_set),
            None)
        if hit is None:
            ok = False
        else:
            zero_certs[x] = hit
    return BigPsiPointResult(ok, graph, zero_certs)


def _rank2_sweep(presentation, relators, point_test):
    rank, basis = abelianization(presentation)
    if rank != 2:
        raise PreconditionError(
            "full-circle computation needs abelianization rank 2, got %d"
            % rank, module="bounds")
    b1, b2 = basis
    n = presentation.n_generators
    for r in relators:
        ev = as_rationals(exponent_vector(r, n))
        if dot(b1, ev) != 0 or dot(b2, ev) != 0:
            raise PreconditionError(
                "a supplied word is not a relator of the group "
                "(exponent vector not killed by all characters)",
                module="bounds")
    theta = [(Fraction(b1[g]), Fraction(b2[g])) for g in range(n)]
    criticals = set()
    for g in range(n):
        tx, ty = theta[g]
        if tx != 0 or ty != 0:
            d = Direction.from_vector((-ty, tx))
            criticals.add(d)
            criticals.add(-d)
    for r in relators:
        verts = []
        x = y = Fraction(0)
        for g, s in r:
            x += s * theta[g][0]
            y += s * theta[g][1]
            verts.append((x, y))
        uniq = sorted(set(verts))
        for i in range(len(uniq)):
            for j in range(i + 1, len(uniq)):
                dx = uniq[i][0] - uniq[j][0]
                dy = uniq[i][1] - uniq[j][1]
                d = Direction.from_vector((-dy, dx))
                criticals.add(d)
                criticals.add(-d)

    def member(d):
        values = tuple(d.vector[0] * theta[g][0] + d.vector[1] * theta[g][1]
                       for g in range(n))
        return point_test(values)

    return region_from_sweep(criticals, member)


def psi_full_circle(presentation, relators=None, symmetrize=True):
    """Exact arc-union value of the basic bound on a rank-2 circle.

    `relators` defaults to the presentation's; extra known relators may be
    passed to sharpen the bound (their exponent vectors must vanish on the
    character space).
    """
    rels = tuple(relators) if relators is not None else presentation.relators
    n = presentation.n_generators
    return _rank2_sweep(
        presentation, rels,
        lambda values: psi_point_test(rels, values, n, symmetrize).member)


def big_psi_full_circle(presentation, relators=None, symmetrize=True):
    """Exact arc-union value of the refined bound on a rank-2 circle."""
    rels = tuple(relators) if relators is not None else presentation.relators
    n = presentation.n_generators
    return _rank2_sweep(
        presentation, rels,
        lambda values: big_psi_point_test(rels, values, n, symmetrize).member)


def wirtinger_relators(m, beta, sigma):
    """The m crossing relators x_j x_b^s x_{j+1}^-1 x_b^-s (indices mod m)."""
    rels = []
    for j in range(m):
        b = beta[j]
        s = sigma[j]
        nxt = (j + 1) % m
        letters = ((j, 1), (b, s), (nxt, -1), (b, -s))
        rels.append(Word(letters))
    return tuple(rels)


def wirtinger_graphs(m, beta, sigma):
    """Both letter graphs of a knot diagram's crossing data, plus the two
    membership flags (connectivity decides membership of the two sphere
    points).

    `beta` and `sigma` are 0-based sequences of length m: crossing j has
    overarc beta[j] and sign sigma[j] in {+1, -1}.  Both graphs have m
    vertices and m edges, counted with multiplicity.
    """
    if m < 1:
        raise PreconditionError("need at least one crossing", module="bounds")
    if len(beta) != m or len(sigma) != m:
        raise PreconditionError("beta and sigma must have length m",
                                module="bounds")
    for j in range(m):
        if not 0 <= beta[j] < m:
            raise PreconditionError("beta out of range", module="bounds")
        if sigma[j] not in (1, -1):
            raise PreconditionError("sigma entries must be +1 or -1",
                                    module="bounds")
    plus_edges = []
    minus_edges = []
    for j in range(m):
        nxt = (j + 1) % m
        if sigma[j] == 1:
            plus_edges.append(frozenset((j, beta[j])))
            minus_edges.append(frozenset((nxt, beta[j])))
        else:
            plus_edges.append(frozenset((nxt, beta[j])))
            minus_edges.append(frozenset((j, beta[j])))
    verts = tuple(range(m))
    g_plus = PsiGraph(verts, tuple(plus_edges))
    g_minus = PsiGraph(verts, tuple(minus_edges))
    return g_plus, g_minus, g_plus.is_connected(), g_minus.is_connected()


def proper_power_root(w):
    """(root, k) with w equal to root**k for the largest k >= 2, else None."""
    n = len(w)
    if n == 0:
        return None
    for d in range(1, n):
        if n % d != 0:
            continue
        if all(w[i] == w[i % d] for i in range(n)):
            return Word(w.letters[:d]), n // d
    return None


@dataclass(frozen=True)
class DeficiencyCertificate:
    """Witness that the invariant is empty on deficiency grounds.

    case 1: at least two more generators than relators; case 2: one fewer
    relator than generators and a proper-power relator; case 3: equal
    counts and two proper-power relators whose exponents share a prime.
    """

    case: int
    prime: int = None
    power_indices: tuple = ()
    exponents: tuple = ()


def _prime_factors(k):
    out = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        out.append(k)
    return out


def emptiness_by_deficiency(presentation):
    """Certificate that the invariant is empty, if a deficiency case applies.

    Returns None when no case applies (which proves nothing).
    """
    m = presentation.n_generators
    rels = [r for r in presentation.relators if not r.is_empty()]
    n = len(rels)
    if m >= 2 and n <= m - 2:
        return DeficiencyCertificate(case=1)
    powers = []
    for i, r in enumerate(rels):
        pp = proper_power_root(r)
        if pp is not None:
            powers.append((i, pp[1]))
    if m >= 2 and n == m - 1 and powers:
        i, k = powers[0]
        return DeficiencyCertificate(case=2, prime=_prime_factors(k)[0],
                                     power_indices=(i,), exponents=(k,))
    if m >= 2 and n == m and len(powers) >= 2:
        for a in range(len(powers)):
            for b in range(a + 1, len(powers)):
                ia, ka = powers[a]
                ib, kb = powers[b]
                shared = set(_prime_factors(ka)) & set(_prime_factors(kb))
                if shared:
                    return DeficiencyCertificate(
                        case=3, prime=min(shared),
                        power_indices=(ia, ib), exponents=(ka, kb))
    return None
