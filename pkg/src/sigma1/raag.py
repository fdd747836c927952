"""Exact invariant of right-angled Artin groups from the defining graph.

Membership of a character is read off its living subgraph (the full
subgraph on generators with nonzero value): connected and dominating means
member.  Globally the complement of the invariant is the union of the
great subspheres spanned by the minimal separating vertex subsets, so the
core computation is enumerating those subsets.  Two independent
enumerators are provided: direct subset enumeration over bitmasks (the
default up to 22 vertices) and the connected-subgraph/boundary strategy;
they are differential-tested against each other.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .characters import as_rationals
from .errors import InputError, PreconditionError
from .regions import SubsphereComplementRegion, all_region
from .words import Presentation, Word


@dataclass(frozen=True)
class SimpleGraph:
    """Finite simple graph on vertices 0..n-1."""

    n_vertices: int
    edges: frozenset

    def __post_init__(self):
        es = set()
        for e in self.edges:
            t = tuple(e)
            if len(t) != 2:
                raise InputError("self-loop at vertex %s" % (t[0],),
                                 module="raag")
            u, v = t
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise InputError("edge endpoint out of range", module="raag")
            es.add(frozenset((u, v)))
        object.__setattr__(self, "edges", frozenset(es))

    @classmethod
    def from_edges(cls, n_vertices, pairs):
        return cls(n_vertices, frozenset(frozenset(p) for p in pairs))

    def adjacency_masks(self):
        adj = [0] * self.n_vertices
        for e in self.edges:
            u, v = tuple(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def neighbors(self, v):
        mask = self.adjacency_masks()[v]
        return {i for i in range(self.n_vertices) if mask >> i & 1}

    def is_complete(self):
        n = self.n_vertices
        return len(self.edges) == n * (n - 1) // 2

    def is_connected(self):
        if self.n_vertices == 0:
            return False
        adj = self.adjacency_masks()
        return _flood(1, (1 << self.n_vertices) - 1, adj) == \
            (1 << self.n_vertices) - 1


def _flood(seed, within, adj):
    comp = seed & within
    while True:
        grown = comp
        m = comp
        while m:
            low = m & -m
            m ^= low
            grown |= adj[low.bit_length() - 1]
        grown = (grown | comp) & within
        if grown == comp:
            return comp
        comp = grown


def _components(mask, adj):
    out = []
    rem = mask
    while rem:
        comp = _flood(rem & -rem, mask, adj)
        out.append(comp)
        rem &= ~comp
    return out


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        mask ^= low
        out.append(low.bit_length() - 1)
    return out


def living_subgraph(graph, chi):
    """Full subgraph on the vertices with nonzero value; returns the
    relabeled subgraph together with its vertex labels in the original."""
    values = as_rationals(chi)
    if len(values) != graph.n_vertices:
        raise PreconditionError("character length != vertex count",
                                module="raag")
    alive = [v for v in range(graph.n_vertices) if values[v] != 0]
    index = {v: i for i, v in enumerate(alive)}
    edges = [(index[u], index[v]) for e in graph.edges
             for u, v in [tuple(e)] if u in index and v in index]
    return SimpleGraph.from_edges(len(alive), edges), tuple(alive)


def raag_point_test(graph, chi):
    """Member iff the living subgraph is connected and dominating."""
    values = as_rationals(chi)
    if len(values) != graph.n_vertices:
        raise PreconditionError("character length != vertex count",
                                module="raag")
    if all(v == 0 for v in values):
        raise PreconditionError("character must be nonzero", module="raag")
    adj = graph.adjacency_masks()
    alive = 0
    for v in range(graph.n_vertices):
        if values[v] != 0:
            alive |= 1 << v
    comp = _flood(alive & -alive, alive, adj)
    if comp != alive:
        return False
    for v in range(graph.n_vertices):
        if not alive >> v & 1 and not adj[v] & alive:
            return False
    return True


def _lemma_check(s_mask, n, adj, full):
    """Minimal-separator criterion: >= 2 components of the complement and
    every separator vertex adjacent to each component."""
    rest = full & ~s_mask
    if rest == 0:
        return None
    comps = _components(rest, adj)
    if len(comps) < 2:
        return None
    for v in _bits(s_mask):
        av = adj[v]
        for comp in comps:
            if not av & comp:
                return None
    return comps


def _direct_minseps(n, adj):
    """Enumerate all subsets and keep those passing the separator check.

    Bitmask flood fill with 8-bit chunked neighbor tables; the fast
    rejection path (complement connected) dominates the running time.
    """
    full = (1 << n) - 1
    nchunks = (n + 7) // 8
    tables = []
    for c in range(nchunks):
        tbl = [0] * 256
        base = c * 8
        for byte in range(1, 256):
            low = byte & -byte
            tbl[byte] = tbl[byte ^ low] | (
                adj[base + low.bit_length() - 1]
                if base + low.bit_length() - 1 < n else 0)
        tables.append(tbl)
    t0 = tables[0]
    t1 = tables[1] if nchunks > 1 else [0] * 256
    t2 = tables[2] if nchunks > 2 else [0] * 256
    out = []
    for s in range(full + 1):
        rest = full & ~s
        if rest == 0:
            continue
        comp = rest & -rest
        while True:
            grown = (t0[comp & 255] | t1[(comp >> 8) & 255]
                     | t2[(comp >> 16) & 255] | comp) & rest
            if grown == comp:
                break
            comp = grown
        if comp == rest:
            continue
        if _lemma_check(s, n, adj, full) is not None:
            out.append(s)
    return out


def _connected_subgraph_minseps(n, adj):
    """Boundary strategy: enumerate connected induced subgraphs of at most
    n/2 vertices; a subgraph's outer boundary is a candidate separator."""
    full = (1 << n) - 1
    max_size = max(1, n // 2)
    candidates = set()

    def closed_nbrs(mask):
        grown = 0
        m = mask
        while m:
            low = m & -m
            m ^= low
            grown |= adj[low.bit_length() - 1]
        return grown

    def rec(cur, ext, size, banned):
        candidates.add(closed_nbrs(cur) & ~cur)
        if size == max_size:
            return
        e = ext
        while e:
            low = e & -e
            e ^= low
            child_ext = (e | adj[low.bit_length() - 1]) & allowed \
                & ~(cur | low) & ~banned
            rec(cur | low, child_ext, size + 1, banned)
            banned |= low

    for v in range(n):
        allowed = full & ~((1 << (v + 1)) - 1)
        rec(1 << v, adj[v] & allowed, 1, 0)
    out = [s for s in candidates if _lemma_check(s, n, adj, full) is not None]
    return out


def minimal_separating_subsets(graph, strategy="auto"):
    """All minimal separating vertex subsets, canonically sorted.

    strategy: "direct" (exhaustive subsets), "components" (connected
    subgraph boundaries), or "auto" (direct up to 22 vertices).  Above 24
    vertices this is exponential; a warning goes to stderr.
    """
    n = graph.n_vertices
    adj = graph.adjacency_masks()
    if n > 24:
        import sys
        print("sigma1.raag: separator enumeration on %d vertices is "
              "exponential; expect a long run" % n, file=sys.stderr)
    if strategy == "auto":
        strategy = "direct" if n <= 22 else "components"
    if strategy == "direct":
        masks = _direct_minseps(n, adj)
    elif strategy == "components":
        masks = _connected_subgraph_minseps(n, adj)
    else:
        raise InputError("unknown strategy %r" % strategy, module="raag")
    subsets = [frozenset(_bits(m)) for m in masks]
    return tuple(sorted(subsets, key=lambda s: (len(s), sorted(s))))


def verify_separator_minimal(graph, subset):
    """Independent re-check: removing the subset disconnects, and removing
    any proper subset obtained by putting one vertex back does not."""
    n = graph.n_vertices
    adj = graph.adjacency_masks()
    full = (1 << n) - 1
    s_mask = 0
    for v in subset:
        s_mask |= 1 << v
    rest = full & ~s_mask
    if rest == 0 or len(_components(rest, adj)) < 2:
        return False
    for v in subset:
        smaller = s_mask & ~(1 << v)
        r2 = full & ~smaller
        if len(_components(r2, adj)) >= 2:
            return False
    return True


def separator_size_classes(graph, separators=None):
    """Histogram of separators by the size of the smallest component left
    after removal (ties counted once per separator)."""
    adj = graph.adjacency_masks()
    full = (1 << graph.n_vertices) - 1
    if separators is None:
        separators = minimal_separating_subsets(graph)
    hist = {}
    for s in separators:
        mask = 0
        for v in s:
            mask |= 1 << v
        comps = _components(full & ~mask, adj)
        smallest = min(bin(c).count("1") for c in comps)
        hist[smallest] = hist.get(smallest, 0) + 1
    return hist


def raag_complement(graph):
    """The invariant as a region: complement = union of the subspheres
    spanned by minimal separating subsets (empty subset -> empty region;
    complete graph -> everything)."""
    n = graph.n_vertices
    if graph.is_complete():
        return all_region(n - 1)
    subspaces = []
    for s in minimal_separating_subsets(graph):
        rows = []
        for v in sorted(s):
            row = [0] * n
            row[v] = 1
            rows.append(tuple(row))
        subspaces.append(tuple(rows))
    return SubsphereComplementRegion.make(n, subspaces)


def max_fg_corank(graph):
    """Largest torsion-free rank of G/N over finitely generated normal
    subgroups N containing the commutator subgroup."""
    n = graph.n_vertices
    if graph.is_complete():
        return n
    seps = minimal_separating_subsets(graph)
    return min(len(s) for s in seps)


def explicit_normal_subgroup(graph):
    """Integer row basis of a subgroup image realizing the maximal co-rank:
    moment-curve (Vandermonde) rows, transversal to every minimal
    separator's coordinate subspace."""
    from . import _linalg

    n = graph.n_vertices
    if graph.is_complete():
        return [tuple(1 if j == i else 0 for j in range(n))
                for i in range(n)]
    seps = minimal_separating_subsets(graph)
    m = min(len(s) for s in seps)
    rows = [tuple((j + 1) ** k for j in range(n)) for k in range(n - m)]
    for s in seps:
        if len(s) != m:
            continue
        coord = [tuple(1 if j == v else 0 for j in range(n)) for v in s]
        if _linalg.stack_rank(rows, coord) != n:
            raise AssertionError(
                "Vandermonde rows fail transversality; this cannot happen")
    return rows


def raag_presentation(graph, names=None):
    """Commutator presentation of the graph group."""
    n = graph.n_vertices
    if names is None:
        names = tuple("x%d" % i for i in range(n))
    rels = []
    for e in sorted(graph.edges, key=sorted):
        u, v = sorted(e)
        rels.append(Word(((u, 1), (v, 1), (u, -1), (v, -1))))
    return Presentation(tuple(names), tuple(rels))


def path_graph(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise InputError("cycle needs at least 3 vertices", module="raag")
    return SimpleGraph.from_edges(
        n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return SimpleGraph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves):
    """K_{1,leaves}: vertex 0 joined to each leaf."""
    return SimpleGraph.from_edges(leaves + 1,
                                  [(0, i + 1) for i in range(leaves)])


def balanced_tree(height):
    """Complete binary tree with the given height (root at height 0)."""
    n = 2 ** (height + 1) - 1
    return SimpleGraph.from_edges(
        n, [((i - 1) // 2, i) for i in range(1, n)])


def dodecahedron_graph():
    """1-skeleton of the regular dodecahedron (20 vertices, 30 edges),
    as the generalized Petersen graph on parameters (10, 2)."""
    edges = []
    for i in range(10):
        edges.append((i, (i + 1) % 10))
        edges.append((i, 10 + i))
        edges.append((10 + i, 10 + (i + 2) % 10))
    return SimpleGraph.from_edges(20, edges)


def bundle_graph(m):
    """m rods of length 3 tied together at both ends: vertices are one
    near hub, the m inner pairs, one far hub; 2m + 2 vertices, 3m edges."""
    if m < 1:
        raise InputError("bundle needs m >= 1", module="raag")
    edges = []
    far = 2 * m + 1
    for j in range(m):
        a = 1 + j
        b = 1 + m + j
        edges.append((0, a))
        edges.append((a, b))
        edges.append((b, far))
    return SimpleGraph.from_edges(2 * m + 2, edges)


def named_graph(name):
    parts = name.split(":")
    kind = parts[0]
    try:
        if kind == "path":
            return path_graph(int(parts[1]))
        if kind == "cycle":
            return cycle_graph(int(parts[1]))
        if kind == "complete":
            return complete_graph(int(parts[1]))
        if kind == "star":
            return star_graph(int(parts[1]))
        if kind == "tree" and parts[1] == "balanced":
            return balanced_tree(int(parts[2]))
        if kind == "dodecahedron":
            return dodecahedron_graph()
        if kind == "bundle":
            return bundle_graph(int(parts[1]))
    except (IndexError, ValueError) as exc:
        raise InputError("bad graph name %r: %s" % (name, exc), module="raag")
    raise InputError("unknown graph name %r" % name, module="raag")


def parse_graph_text(text):
    """Edge-list format: first line the vertex count, then `u v` pairs
    (0-based); blank lines and '#' comments allowed."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty graph file", module="raag")
    try:
        n = int(lines[0])
    except ValueError:
        raise InputError("first line must be the vertex count", module="raag")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError("bad edge line %r" % ln, module="raag")
        edges.append((int(parts[0]), int(parts[1])))
    return SimpleGraph.from_edges(n, edges)
