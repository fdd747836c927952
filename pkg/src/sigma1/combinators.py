"""Closed-form constructions: products, wreath products, joins, and the
finitely-generated-normal-subgroup calculus over exact rational subspaces.

Everything here works on the symbolic region family: complements given as
unions of coordinate-space subspheres plus finitely many points.  The
subspace side is plain exact linear algebra; the only construction with
content is the simultaneous supplement, built greedily along the moment
curve exactly as the covering argument for finitely many proper subspaces
suggests.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg
from .errors import DimensionMismatchError, PreconditionError
from .regions import (Direction, EmptyRegion, SubsphereComplementRegion,
                      all_region)


@dataclass(frozen=True)
class SubspaceQ:
    """A rational subspace of Q^n given by a canonical integer row basis."""

    n: int
    basis: tuple

    def __post_init__(self):
        rows = [list(r) for r in self.basis]
        for r in rows:
            if len(r) != self.n:
                raise DimensionMismatchError(
                    "basis row of length %d in Q^%d" % (len(r), self.n))
        canon = tuple(tuple(r) for r in _linalg.integer_row_basis(rows))
        object.__setattr__(self, "basis", canon)

    @property
    def dim(self):
        return len(self.basis)

    def plus(self, other):
        if self.n != other.n:
            raise DimensionMismatchError("subspaces of different ambient dim")
        return SubspaceQ(self.n, self.basis + other.basis)

    def contains_vector(self, vec):
        return _linalg.span_contains(self.basis, vec)


def coordinate_subspace(n, coords):
    rows = []
    for c in sorted(coords):
        row = [0] * n
        row[c] = 1
        rows.append(tuple(row))
    return SubspaceQ(n, tuple(rows))


@dataclass(frozen=True)
class ComplementData:
    """Complement of an invariant inside S(G): subspheres S(G, U_j) plus
    isolated points, over an n-dimensional character coordinate space."""

    n: int
    subspaces: tuple  # of SubspaceQ
    points: tuple  # of Direction

    @classmethod
    def make(cls, n, subspaces=(), points=()):
        subs = tuple(u if isinstance(u, SubspaceQ) else SubspaceQ(n, tuple(u))
                     for u in subspaces)
        for u in subs:
            if u.n != n:
                raise DimensionMismatchError("subspace ambient mismatch")
        pts = tuple(p if isinstance(p, Direction) else Direction.from_vector(p)
                    for p in points)
        for p in pts:
            if len(p) != n:
                raise DimensionMismatchError("point length mismatch")
        return cls(n, subs, pts)

    @classmethod
    def empty(cls, n):
        return cls.make(n)

    @classmethod
    def everything(cls, n):
        return cls.make(n, [SubspaceQ(n, ())])

    def to_region(self):
        """The invariant itself (complement of this data) as a region."""
        return SubsphereComplementRegion.make(
            self.n, [u.basis for u in self.subspaces],
            [p.vector for p in self.points])

    def contains_direction(self, d):
        """Is the point [d] inside the complement?"""
        if len(d) != self.n:
            raise DimensionMismatchError("direction length mismatch")
        for u in self.subspaces:
            if all(sum(a * b for a, b in zip(d.vector, row)) == 0
                   for row in u.basis):
                return True
        return d in self.points


def _embed_subspace(u, n1, n2, first):
    """U inside the factor's coordinates maps to U + (other factor's whole
    coordinate block) in the product coordinates."""
    n = n1 + n2
    rows = []
    for r in u.basis:
        rows.append(tuple(r) + (0,) * n2 if first else (0,) * n1 + tuple(r))
    other = range(n1, n) if first else range(0, n1)
    for c in other:
        row = [0] * n
        row[c] = 1
        rows.append(tuple(row))
    return SubspaceQ(n, tuple(rows))


def _embed_point(p, n1, n2, first):
    vec = tuple(p.vector) + (0,) * n2 if first else (0,) * n1 + tuple(p.vector)
    return Direction(vec)


def product_complement(c1, c2):
    """Complement of the invariant of a direct product, from the factors'.

    Each factor complement piece is pushed forward along the projection:
    a subsphere S(G1, W) becomes S(G1 x G2, W + Q^{n2}), and a complement
    point acquires zero padding.  Returns the product's invariant as a
    symbolic region over n1 + n2 coordinates.
    """
    n1, n2 = c1.n, c2.n
    subs = [_embed_subspace(u, n1, n2, True) for u in c1.subspaces]
    subs += [_embed_subspace(u, n1, n2, False) for u in c2.subspaces]
    pts = [_embed_point(p, n1, n2, True) for p in c1.points]
    pts += [_embed_point(p, n1, n2, False) for p in c2.points]
    data = ComplementData.make(n1 + n2, subs, pts)
    return data.to_region()


def wreath_complement(n_h, n_q):
    """Invariant of a wreath product, given the torsion-free ranks of the
    two factors' abelianizations; coordinates list the base-factor block
    first.  The complement is the subsphere of characters vanishing on the
    base factor."""
    if n_h < 0 or n_q < 0:
        raise PreconditionError("ranks must be nonnegative",
                                module="combinators")
    n = n_h + n_q
    if n == 0:
        return EmptyRegion(-1)
    u = coordinate_subspace(n, range(n_h))
    return ComplementData.make(n, [u]).to_region()


def join_test(part_flags, pair_witnesses):
    """Sufficient membership test for a group generated by named parts.

    `part_flags[v]` says whether the restricted character is nonzero and a
    member for part v; `pair_witnesses[(u, v)]` lists rational chi-values
    of caller-chosen elements of the intersection of parts u and v.  True
    means member (connect the parts through nonzero intersections); False
    proves nothing.
    """
    if not part_flags:
        raise PreconditionError("need at least one part", module="combinators")
    if not all(part_flags):
        return False
    k = len(part_flags)
    adj = {i: set() for i in range(k)}
    for (u, v), values in pair_witnesses.items():
        if not (0 <= u < k and 0 <= v < k):
            raise PreconditionError("witness pair out of range",
                                    module="combinators")
        if any(Fraction(x) != 0 for x in values):
            adj[u].add(v)
            adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == k


def fg_normal_test(complement_subspaces, n_image, n):
    """Certify that a normal subgroup containing the derived group is
    finitely generated: its image span must be transversal to every
    complement subsphere's subspace (the subsphere of the subgroup then
    avoids the whole complement)."""
    img = n_image if isinstance(n_image, SubspaceQ) else SubspaceQ(
        n, tuple(tuple(r) for r in n_image))
    if img.n != n:
        raise DimensionMismatchError("image ambient mismatch")
    for u in complement_subspaces:
        uu = u if isinstance(u, SubspaceQ) else SubspaceQ(n, tuple(u))
        if _linalg.stack_rank(img.basis, uu.basis) != n:
            return False
    return True


def max_corank(complement_subspaces, n=None):
    """Largest torsion-free co-rank achievable by a finitely generated
    normal subgroup when the complement is inside the given subspheres."""
    subs = list(complement_subspaces)
    if not subs:
        raise PreconditionError("need at least one subspace; an empty "
                                "complement allows co-rank n trivially",
                                module="combinators")
    dims = []
    for u in subs:
        uu = u if isinstance(u, SubspaceQ) else SubspaceQ(
            n if n is not None else len(tuple(u)[0]), tuple(u))
        dims.append(uu.dim)
    return min(dims)


def _moment_vector(t, n):
    return tuple(t ** k for k in range(n))


def simultaneous_supplement(subspaces, n):
    """A subspace of co-dimension min dim U_j transversal to every U_j.

    Vectors are picked greedily along the moment curve (1, t, ..., t^{n-1})
    for t = 0, 1, 2, ...; a candidate is accepted when it avoids the span
    of every not-yet-full obstruction U_j + current picks.  A d-dimensional
    subspace contains at most d moment-curve points, so the scan is bounded.
    """
    subs = [u if isinstance(u, SubspaceQ) else SubspaceQ(n, tuple(u))
            for u in subspaces]
    if not subs:
        raise PreconditionError("need at least one subspace",
                                module="combinators")
    for u in subs:
        if u.n != n:
            raise DimensionMismatchError("subspace ambient mismatch")
    m = min(u.dim for u in subs)
    target = n - m
    picked = []
    t = 0
    scan_bound = (len(subs) + 1) * n * (target + 1) + 1
    while len(picked) < target:
        if t > scan_bound:
            raise AssertionError("moment-curve scan exceeded its bound")
        v = _moment_vector(t, n)
        t += 1
        if _linalg.span_contains(picked, v):
            continue
        blocked = False
        for u in subs:
            current = list(u.basis) + picked
            if _linalg.rank(current) < n and _linalg.span_contains(current, v):
                blocked = True
                break
        if blocked:
            continue
        picked.append(v)
    result = SubspaceQ(n, tuple(picked))
    for u in subs:
        if _linalg.stack_rank(result.basis, u.basis) != n:
            raise AssertionError("supplement fails transversality")
    return result
