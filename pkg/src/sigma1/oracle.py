"""Finite Cayley-ball certificate search over pluggable exact group models.

A certificate for membership of [chi] names a letter t of positive value
and, for every letter y, a word w_y with t * w_y = y * t whose path from t
keeps the chi-level strictly above min(0, chi(y)).  Any such certificate
PROVES membership; absence at a finite radius proves nothing.  The models
do exact arithmetic only: integer vectors, reduced words, piled canonical
words for graph groups, and (rational, integer) pairs for the ascending
Baumslag-Solitar-type groups.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .characters import as_rationals, v_chi
from .errors import InvalidCharacterError, PreconditionError
from .words import Word


class GroupModel:
    """Exact group arithmetic with canonical (hashable) element keys."""

    name = "abstract"
    n_generators = 0

    def one(self):
        raise NotImplementedError

    def gen(self, i, sign=1):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def key(self, a):
        return a

    def element_of_word(self, letters):
        out = self.one()
        for g, s in letters:
            out = self.mul(out, self.gen(g, s))
        return out

    def validate_character(self, values):
        values = as_rationals(values)
        if len(values) != self.n_generators:
            raise InvalidCharacterError(
                "character has %d values for %d generators"
                % (len(values), self.n_generators))
        if all(v == 0 for v in values):
            raise InvalidCharacterError("character must be nonzero")
        return values

    def known_membership(self, values):
        """Ground truth where available; None when unknown."""
        return None


class FreeAbelianModel(GroupModel):
    def __init__(self, n):
        if n < 1:
            raise PreconditionError("need n >= 1", module="oracle")
        self.n_generators = n
        self.name = "abelian:%d" % n
        self.generator_names = tuple("x%d" % i for i in range(n))

    def one(self):
        return (0,) * self.n_generators

    def gen(self, i, sign=1):
        return tuple(sign if j == i else 0 for j in range(self.n_generators))

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a):
        return tuple(-x for x in a)

    def known_membership(self, values):
        return True


def _free_mul(a, b):
    a = list(a)
    i = 0
    for letter in b:
        if a and a[-1][0] == letter[0] and a[-1][1] == -letter[1]:
            a.pop()
        else:
            a.append(letter)
    return tuple(a)


class FreeModel(GroupModel):
    def __init__(self, n):
        if n < 1:
            raise PreconditionError("need n >= 1", module="oracle")
        self.n_generators = n
        self.name = "free:%d" % n
        self.generator_names = tuple("x%d" % i for i in range(n))

    def one(self):
        return ()

    def gen(self, i, sign=1):
        return ((i, sign),)

    def mul(self, a, b):
        return _free_mul(a, b)

    def inv(self, a):
        return tuple((g, -s) for g, s in reversed(a))

    def known_membership(self, values):
        return self.n_generators == 1


class RaagModel(GroupModel):
    """Graph group with the piling (heaps-of-pieces) canonical form.

    Elements are canonical reduced words: letters are emitted by repeatedly
    extracting the lowest-index generator whose pile is exposed, which is
    a confluent normal form for the commutation congruence.
    """

    def __init__(self, graph):
        self.graph = graph
        self.n_generators = graph.n_vertices
        self.name = "raag"
        self.generator_names = tuple("x%d" % i for i in range(graph.n_vertices))
        adj = graph.adjacency_masks()
        self._noncomm = []
        for i in range(self.n_generators):
            mask = ~adj[i]
            self._noncomm.append(tuple(
                j for j in range(self.n_generators)
                if j != i and (mask >> j) & 1))

    def one(self):
        return ()

    def gen(self, i, sign=1):
        return ((i, sign),)

    def _pile(self, letters):
        piles = [[] for _ in range(self.n_generators)]
        for g, s in letters:
            p = piles[g]
            if p and p[-1] == -s:
                p.pop()
                for j in self._noncomm[g]:
                    piles[j].pop()
            else:
                p.append(s)
                for j in self._noncomm[g]:
                    piles[j].append(0)
        return piles

    def _depile(self, piles):
        fronts = [0] * self.n_generators
        ends = [len(p) for p in piles]
        out = []
        while True:
            emitted = False
            for i in range(self.n_generators):
                if fronts[i] < ends[i] and piles[i][fronts[i]] != 0:
                    out.append((i, piles[i][fronts[i]]))
                    fronts[i] += 1
                    for j in self._noncomm[i]:
                        fronts[j] += 1
                    emitted = True
                    break
            if not emitted:
                break
        assert all(fronts[i] == ends[i] for i in range(self.n_generators))
        return tuple(out)

    def normal_form(self, letters):
        return self._depile(self._pile(letters))

    def mul(self, a, b):
        return self.normal_form(tuple(a) + tuple(b))

    def inv(self, a):
        return self.normal_form(tuple((g, -s) for g, s in reversed(a)))

    def known_membership(self, values):
        from .raag import raag_point_test
        return raag_point_test(self.graph, values)


class GpqModel(GroupModel):
    """Split extension of the pq-adic rationals by Z, the stable generator
    acting by multiplication by q/p; for (1, 2) this is the group with
    u a u^-1 = a^2.  Elements are (rational, integer) pairs."""

    def __init__(self, p, q):
        p, q = int(p), int(q)
        if p == 0 or q == 0 or gcd(abs(p), abs(q)) != 1:
            raise PreconditionError("p, q must be nonzero coprime integers",
                                    module="oracle")
        self.p, self.q = p, q
        self.ratio = Fraction(q, p)
        self.n_generators = 2
        self.name = "gpq:%d,%d" % (p, q)
        self.generator_names = ("a", "u")

    def one(self):
        return (Fraction(0), 0)

    def gen(self, i, sign=1):
        if i == 0:
            return (Fraction(sign), 0)
        return (Fraction(0), sign)

    def mul(self, a, b):
        (x, m), (x2, m2) = a, b
        return (x + self.ratio ** m * x2, m + m2)

    def inv(self, a):
        x, m = a
        return (-(self.ratio ** (-m)) * x, -m)

    def validate_character(self, values):
        values = super().validate_character(values)
        if abs(self.ratio) != 1 and values[0] != 0:
            raise InvalidCharacterError(
                "characters of this group vanish on the first generator")
        return values

    def known_membership(self, values):
        if abs(self.p) == 1 and abs(self.q) == 1:
            return True
        c = values[1]
        if c < 0:
            return abs(self.p) == 1
        return abs(self.q) == 1


def build_free_abelian(n):
    return FreeAbelianModel(n)


def build_free(n):
    return FreeModel(n)


def build_raag(graph):
    return RaagModel(graph)


def build_gpq(p, q):
    return GpqModel(p, q)


@dataclass(frozen=True)
class Certificate:
    """A verified membership certificate: the chosen positive letter and,
    for each letter y, the word w_y with t * w_y = y * t staying strictly
    above min(0, chi(y))."""

    t: tuple
    words: dict
    radius: int

    def verify(self, model, values):
        values = as_rationals(values)
        chi_t = values[self.t[0]] * self.t[1]
        if chi_t <= 0:
            return False
        t_el = model.gen(*self.t)
        for y, letters in self.words.items():
            bound = min(Fraction(0), values[y[0]] * y[1])
            lhs = model.key(model.mul(t_el, model.element_of_word(letters)))
            rhs = model.key(model.mul(model.gen(*y), t_el))
            if lhs != rhs:
                return False
            if chi_t + v_chi(Word(letters), values) <= bound:
                return False
        return True


def _letters(model):
    n = model.n_generators
    return [(i, 1) for i in range(n)] + [(i, -1) for i in range(n)]


def certificate_search(model, chi, radius):
    """Breadth-first certificate search in the ball of the given radius.

    Returns a re-verified Certificate, or None (which proves nothing).
    The search space for a letter y is the set of elements of chi-level
    strictly above min(0, chi(y)), reached from t; levels are tracked
    additively along paths, which is sound because characters are
    homomorphisms.
    """
    if radius < 1:
        raise PreconditionError("radius must be >= 1", module="oracle")
    values = model.validate_character(chi)
    letters = _letters(model)
    chi_of = {y: values[y[0]] * y[1] for y in letters}
    t = max(letters, key=lambda y: (chi_of[y], -letters.index(y)))
    if chi_of[t] <= 0:
        raise PreconditionError("no generator-or-inverse has positive value",
                                module="oracle")
    t_el = model.gen(*t)
    bounds = sorted({min(Fraction(0), chi_of[y]) for y in letters},
                    reverse=True)
    gen_elems = {y: model.gen(*y) for y in letters}
    targets = {}
    for y in letters:
        targets.setdefault(min(Fraction(0), chi_of[y]), {})[
            model.key(model.mul(gen_elems[y], t_el))] = y
    words = {}
    for bound in bounds:
        wanted = dict(targets[bound])
        start_key = model.key(t_el)
        parent = {start_key: None}
        frontier = [(t_el, start_key, chi_of[t])]
        if start_key in wanted:
            words[wanted.pop(start_key)] = ()
        depth = 0
        while frontier and wanted and depth < radius:
            depth += 1
            nxt = []
            for el, key, level in frontier:
                for y in letters:
                    lvl2 = level + chi_of[y]
                    if lvl2 <= bound:
                        continue
                    el2 = model.mul(el, gen_elems[y])
                    key2 = model.key(el2)
                    if key2 in parent:
                        continue
                    parent[key2] = (key, y)
                    nxt.append((el2, key2, lvl2))
                    if key2 in wanted:
                        words[wanted.pop(key2)] = _unwind(parent, key2)
            frontier = nxt
        if wanted:
            return None
    cert = Certificate(t, words, radius)
    if not cert.verify(model, values):
        raise AssertionError("search produced an invalid certificate")
    return cert


def _unwind(parent, key):
    out = []
    while parent[key] is not None:
        key, letter = parent[key]
        out.append(letter)
    return tuple(reversed(out))


@dataclass(frozen=True)
class ConnectivityReport:
    """DIAGNOSTIC ONLY: band-restricted connectivity inside a finite ball.

    Nothing here proves membership or non-membership; the report simply
    describes the induced subgraph on ball elements with chi-value in the
    band."""

    radius: int
    band: tuple
    n_elements: int
    n_components: int
    identity_component_size: int  # 0 when the identity is outside the band
    components_touching_boundary: int
    diagnostic: str = field(
        default="finite-ball evidence only; proves neither membership "
                "nor non-membership")


def connectivity_probe(model, chi, radius, band):
    lo, hi = Fraction(band[0]), Fraction(band[1])
    if lo > hi:
        raise PreconditionError("empty band", module="oracle")
    values = model.validate_character(chi)
    letters = _letters(model)
    chi_of = {y: values[y[0]] * y[1] for y in letters}
    gen_elems = {y: model.gen(*y) for y in letters}
    one = model.one()
    dist = {model.key(one): 0}
    info = {model.key(one): (one, Fraction(0))}
    frontier = [one]
    for d in range(1, radius + 1):
        nxt = []
        for el in frontier:
            key = model.key(el)
            level = info[key][1]
            for y in letters:
                el2 = model.mul(el, gen_elems[y])
                key2 = model.key(el2)
                if key2 not in dist:
                    dist[key2] = d
                    info[key2] = (el2, level + chi_of[y])
                    nxt.append(el2)
        frontier = nxt
    members = {k for k, (el, lvl) in info.items() if lo <= lvl <= hi}
    # union-find over the induced subgraph
    up = {k: k for k in members}

    def find(k):
        while up[k] != k:
            up[k] = up[up[k]]
            k = up[k]
        return k

    for k in members:
        el = info[k][0]
        for y in letters:
            k2 = model.key(model.mul(el, gen_elems[y]))
            if k2 in members:
                ra, rb = find(k), find(k2)
                if ra != rb:
                    up[ra] = rb
    roots = {find(k) for k in members}
    id_key = model.key(one)
    id_size = 0
    if id_key in members:
        id_root = find(id_key)
        id_size = sum(1 for k in members if find(k) == id_root)
    touching = {find(k) for k in members if dist[k] == radius}
    return ConnectivityReport(radius, (lo, hi), len(members), len(roots),
                              id_size, len(touching))
