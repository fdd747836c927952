"""Exact subsets of the character sphere S(G).

Five region families, mirroring what the computations actually produce:
Empty and All at any dimension; finite point sets (rank-0 spheres, i.e.
two-point spheres, and the output of point sweeps); arc unions on the
circle (dim 1); and a symbolic family whose COMPLEMENT is a finite union
of great subspheres S(G, U_j) plus finitely many points.  Arc unions are
kept in a normalized "painted circle" form: the circle is cut at finitely
many exact direction vectors and every resulting cell (boundary point or
open arc) carries a membership flag.  All direction arithmetic is exact;
angles never become floats except in the SVG emitter.
"""

import functools
import json as _json
from dataclasses import dataclass
from fractions import Fraction
from math import atan2, cos, pi, sin

from . import _linalg
from .errors import (DimensionMismatchError, PreconditionError,
                     UnsupportedRegionCombination)


@dataclass(frozen=True)
class Direction:
    """A primitive integer vector; the exact representative of a ray."""

    vector: tuple

    def __post_init__(self):
        v = tuple(int(x) for x in self.vector)
        if all(x == 0 for x in v):
            raise PreconditionError("zero vector is not a direction",
                                    module="regions")
        object.__setattr__(self, "vector", v)
        from math import gcd
        g = 0
        for x in v:
            g = gcd(g, abs(x))
        if g != 1:
            raise PreconditionError(
                "direction %r is not primitive" % (v,), module="regions")

    @classmethod
    def from_vector(cls, values):
        return cls(_linalg.primitive_int_vector(values))

    def __neg__(self):
        return Direction(tuple(-x for x in self.vector))

    def __len__(self):
        return len(self.vector)

    def __iter__(self):
        return iter(self.vector)


def _angle_cmp_vec(u, v):
    """Counterclockwise order of 2D vectors starting at the positive x-axis."""
    (ux, uy), (vx, vy) = u, v
    hu = 0 if (uy > 0 or (uy == 0 and ux > 0)) else 1
    hv = 0 if (vy > 0 or (vy == 0 and vx > 0)) else 1
    if hu != hv:
        return -1 if hu < hv else 1
    cross = ux * vy - uy * vx
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def angle_cmp(a, b):
    return _angle_cmp_vec(a.vector, b.vector)


angle_key = functools.cmp_to_key(angle_cmp)


def ccw_strictly_between(a, d, c):
    """True iff d lies strictly inside the open ccw arc from a to c.

    a == c denotes the full circle with the point a removed.
    """
    if a == c:
        return d != a
    if d == a or d == c:
        return False
    ac = angle_cmp(a, c)
    ad = angle_cmp(a, d)
    dc = angle_cmp(d, c)
    if ac < 0:
        return ad < 0 and dc < 0
    return ad < 0 or dc < 0


def between_sample(a, c):
    """An exact direction strictly inside the open ccw arc from a to c,
    valid whenever the ccw gap from a to c is less than pi."""
    s = tuple(x + y for x, y in zip(a.vector, c.vector))
    d = Direction.from_vector(s)
    if not ccw_strictly_between(a, d, c):
        raise PreconditionError(
            "arc from %r to %r spans at least half the circle"
            % (a.vector, c.vector), module="regions")
    return d


class SphereRegion:
    """Base class; concrete families below expose `dim` and `contains`."""

    def contains(self, direction):
        raise NotImplementedError

    def to_json_dict(self):
        raise NotImplementedError


def _check_same_dim(r1, r2):
    if r1.dim != r2.dim:
        raise DimensionMismatchError(
            "regions of dim %s and %s" % (r1.dim, r2.dim))


@dataclass(frozen=True)
class EmptyRegion(SphereRegion):
    dim: int

    def contains(self, direction):
        return False

    def to_json_dict(self):
        return {"dim": self.dim, "kind": "empty"}


@dataclass(frozen=True)
class AllRegion(SphereRegion):
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise PreconditionError(
                "the empty sphere has no All region; use EmptyRegion(-1)",
                module="regions")

    def contains(self, direction):
        return True

    def to_json_dict(self):
        return {"dim": self.dim, "kind": "all"}


def all_region(dim):
    """All of S(G); on the empty sphere this is the empty region."""
    return EmptyRegion(-1) if dim < 0 else AllRegion(dim)


@dataclass(frozen=True)
class PointSetRegion(SphereRegion):
    """A finite set of sphere points; `ambient` optionally lists the whole
    sphere (used on 0-dimensional spheres so complement makes sense)."""

    dim: int
    points: frozenset
    ambient: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "points", frozenset(self.points))
        if self.ambient is not None:
            amb = tuple(sorted(self.ambient, key=lambda d: d.vector))
            object.__setattr__(self, "ambient", amb)
            if not self.points <= set(amb):
                raise PreconditionError("points outside the ambient sphere",
                                        module="regions")

    def contains(self, direction):
        return direction in self.points

    def to_json_dict(self):
        pts = sorted(self.points, key=lambda d: d.vector)
        out = {"dim": self.dim, "kind": "point_set",
               "points": [list(d.vector) for d in pts]}
        if self.ambient is not None:
            out["ambient"] = [list(d.vector) for d in self.ambient]
        return out


@dataclass(frozen=True)
class ArcUnionRegion(SphereRegion):
    """Painted circle: boundary directions in ccw order, each with a
    membership flag, plus a flag for every open arc between consecutive
    boundaries.  Construction normalizes; All/Empty never survive here
    (use `paint_region`)."""

    boundaries: tuple
    boundary_in: tuple
    arc_in: tuple
    dim = 1

    def __post_init__(self):
        if not self.boundaries:
            raise PreconditionError(
                "ArcUnionRegion needs at least one boundary; "
                "use all_region/EmptyRegion for uniform regions",
                module="regions")
        if not (len(self.boundaries) == len(self.boundary_in) ==
                len(self.arc_in)):
            raise PreconditionError("inconsistent paint data",
                                    module="regions")

    def _locate(self, d):
        """Return ('boundary', i) or ('arc', i) for the cell containing d;
        arc i is the open arc from boundaries[i] to boundaries[i+1 mod m]."""
        bs = self.boundaries
        lo, hi = 0, len(bs)
        # find the number of boundaries angularly <= d
        while lo < hi:
            mid = (lo + hi) // 2
            c = angle_cmp(bs[mid], d)
            if c == 0:
                return ("boundary", mid)
            if c < 0:
                lo = mid + 1
            else:
                hi = mid
        return ("arc", (lo - 1) % len(bs))

    def contains(self, direction):
        kind, i = self._locate(direction)
        return self.boundary_in[i] if kind == "boundary" else self.arc_in[i]

    def value_just_after(self, d):
        """Membership of points immediately ccw-after d."""
        kind, i = self._locate(d)
        return self.arc_in[i]

    def arcs_and_points(self):
        """External form: list of (start, end, start_closed, end_closed)
        maximal arcs plus isolated member points.

        An arc with start == end (both open) is the full circle with that
        single boundary point removed.
        """
        m = len(self.boundaries)
        # cyclic cell list: boundary 0, arc 0, boundary 1, arc 1, ...
        cells = []
        for i in range(m):
            cells.append(("b", i, self.boundary_in[i]))
            cells.append(("a", i, self.arc_in[i]))
        n = len(cells)
        vals = [c[2] for c in cells]
        # normalization guarantees the region is not all of the circle
        start0 = next(k for k in range(n) if not vals[k])
        arcs, points = [], []
        k = 0
        while k < n:
            if not vals[(start0 + k) % n]:
                k += 1
                continue
            j = k
            while j < n and vals[(start0 + j) % n]:
                j += 1
            run = [cells[(start0 + x) % n] for x in range(k, j)]
            first, last = run[0], run[-1]
            if len(run) == 1 and first[0] == "b":
                points.append(self.boundaries[first[1]])
            else:
                # arc cell i spans boundaries[i] .. boundaries[i+1]
                sdir = self.boundaries[first[1]]
                sclosed = first[0] == "b"
                if last[0] == "b":
                    edir, eclosed = self.boundaries[last[1]], True
                else:
                    edir, eclosed = self.boundaries[(last[1] + 1) % m], False
                arcs.append((sdir, edir, sclosed, eclosed))
            k = j
        return arcs, points

    def to_json_dict(self):
        arcs, points = self.arcs_and_points()
        return {
            "dim": 1,
            "kind": "arc_union",
            "arcs": [{"from": list(a.vector), "to": list(b.vector),
                      "from_closed": fc, "to_closed": tc}
                     for (a, b, fc, tc) in arcs],
            "points": [list(p.vector) for p in points],
        }


def paint_region(boundaries, boundary_in, arc_in):
    """Build a normalized circle region from painted-cell data.

    `boundaries` must be distinct directions; they are sorted ccw here,
    with flags carried along.  Returns All/Empty when uniform.
    """
    cells = sorted(zip(boundaries, boundary_in, arc_in),
                   key=lambda t: angle_key(t[0]))
    bs = tuple(t[0] for t in cells)
    for i in range(1, len(bs)):
        if bs[i - 1] == bs[i]:
            raise PreconditionError("duplicate boundary %r" % (bs[i].vector,),
                                    module="regions")
    bin_ = tuple(t[1] for t in cells)
    ain = tuple(t[2] for t in cells)
    m = len(bs)
    keep = [i for i in range(m)
            if not (bin_[i] == ain[i - 1] == ain[i])]
    if not keep:
        if not bs:
            raise PreconditionError("no paint data", module="regions")
        return AllRegion(1) if ain[0] else EmptyRegion(1)
    bs2 = tuple(bs[i] for i in keep)
    bin2 = tuple(bin_[i] for i in keep)
    ain2 = tuple(ain[i] for i in keep)
    return ArcUnionRegion(bs2, bin2, ain2)


def region_from_sweep(criticals, member_at):
    """Assemble a circle region from a critical direction set and a
    membership predicate (evaluated at the criticals and once per gap).

    Consecutive criticals must subtend less than half the circle; the
    callers guarantee this by including antipode-closed critical sets.
    """
    crit = sorted(set(criticals), key=angle_key)
    if len(crit) < 2:
        raise PreconditionError("need at least two critical directions",
                                module="regions")
    b_in = [bool(member_at(d)) for d in crit]
    a_in = []
    for i, d in enumerate(crit):
        nxt = crit[(i + 1) % len(crit)]
        a_in.append(bool(member_at(between_sample(d, nxt))))
    return paint_region(tuple(crit), tuple(b_in), tuple(a_in))


def canonical_subspace(rows):
    """Canonical integer RREF basis of the span, as a tuple of tuples."""
    basis = _linalg.integer_row_basis([list(r) for r in rows])
    return tuple(tuple(r) for r in basis)


def _subspace_contains(u_rows, w_rows):
    """span(w) <= span(u)?"""
    if not w_rows:
        return True
    if not u_rows:
        return False
    base = [list(r) for r in u_rows]
    return _linalg.rank(base + [list(r) for r in w_rows]) == \
        _linalg.rank(base)


def _direction_on_subsphere(d, u_rows):
    """Is [d] on S(G, U), i.e. does the character d vanish on U?"""
    return all(sum(a * b for a, b in zip(d.vector, row)) == 0
               for row in u_rows)


@dataclass(frozen=True)
class SubsphereComplementRegion(SphereRegion):
    """Region whose complement is a union of great subspheres S(G, U_j)
    plus finitely many explicit points.

    `n` is the coordinate dimension of the ambient character space (so the
    sphere has dim n - 1).  Subspaces are canonical integer row bases; a
    zero subspace (empty row tuple) makes the whole sphere complement,
    i.e. the region Empty — callers should normalize via make().
    """

    n: int
    subspheres: tuple
    complement_points: tuple

    @property
    def dim(self):
        return self.n - 1

    @classmethod
    def make(cls, n, subspaces, points=()):
        subs = []
        for rows in subspaces:
            c = canonical_subspace(rows)
            subs.append(c)
        # drop duplicates, then supersets (S(G,U) <= S(G,U') iff U' <= U)
        subs = list(dict.fromkeys(subs))
        kept = []
        for i, u in enumerate(subs):
            redundant = False
            for j, w in enumerate(subs):
                if i == j:
                    continue
                if _subspace_contains(u, w) and not (
                        _subspace_contains(w, u) and j > i):
                    # w <= u, so S(u) <= S(w): u is redundant
                    redundant = True
                    break
            if not redundant:
                kept.append(u)
        if any(len(u) == 0 for u in kept):
            # S(G, {0}) is the whole sphere: the region is empty
            return EmptyRegion(n - 1)
        # a full-dimensional subspace has an empty subsphere: drop it
        kept = [u for u in kept if len(u) < n]
        pts = []
        for p in points:
            d = p if isinstance(p, Direction) else Direction.from_vector(p)
            if len(d) != n:
                raise DimensionMismatchError(
                    "complement point of length %d in ambient %d"
                    % (len(d), n))
            if not any(_direction_on_subsphere(d, u) for u in kept):
                pts.append(d)
        pts = tuple(sorted(set(pts), key=lambda d: d.vector))
        kept = tuple(sorted(kept))
        if not kept and not pts:
            return all_region(n - 1)
        return cls(n, kept, pts)

    def contains(self, direction):
        if len(direction) != self.n:
            raise DimensionMismatchError(
                "direction of length %d in ambient %d"
                % (len(direction), self.n))
        if any(_direction_on_subsphere(direction, u)
               for u in self.subspheres):
            return False
        return direction not in self.complement_points

    def to_json_dict(self):
        return {
            "dim": self.dim,
            "kind": "complement_of_subspheres",
            "n": self.n,
            "subspheres": [[list(row) for row in u] for u in self.subspheres],
            "points": [list(p.vector) for p in self.complement_points],
        }


def subsphere_disjoint(u_rows, w_rows, n):
    """S(G,U) and S(G,W) are disjoint iff span(U) + span(W) is everything."""
    return _linalg.stack_rank(u_rows, w_rows) == n


def union(r1, r2):
    _check_same_dim(r1, r2)
    if isinstance(r1, EmptyRegion):
        return r2
    if isinstance(r2, EmptyRegion):
        return r1
    if isinstance(r1, AllRegion) or isinstance(r2, AllRegion):
        return AllRegion(r1.dim)
    if isinstance(r1, PointSetRegion) and isinstance(r2, PointSetRegion):
        amb = r1.ambient if r1.ambient is not None else r2.ambient
        return PointSetRegion(r1.dim, r1.points | r2.points, amb)
    if isinstance(r1, ArcUnionRegion) and isinstance(r2, ArcUnionRegion):
        combined = sorted(set(r1.boundaries) | set(r2.boundaries), key=angle_key)
        b_in = [r1.contains(d) or r2.contains(d) for d in combined]
        a_in = [r1.value_just_after(d) or r2.value_just_after(d)
                for d in combined]
        return paint_region(tuple(combined), tuple(b_in), tuple(a_in))
    if isinstance(r1, ArcUnionRegion) and isinstance(r2, PointSetRegion):
        return _arc_union_with_points(r1, r2.points)
    if isinstance(r2, ArcUnionRegion) and isinstance(r1, PointSetRegion):
        return _arc_union_with_points(r2, r1.points)
    if isinstance(r1, SubsphereComplementRegion) and \
            isinstance(r2, SubsphereComplementRegion):
        if r1.n != r2.n:
            raise DimensionMismatchError("ambient dims differ")
        subs = []
        for u in r1.subspheres:
            for w in r2.subspheres:
                subs.append(list(u) + list(w))
        pts = [p for p in r1.complement_points if not r2.contains(p)]
        pts += [p for p in r2.complement_points if not r1.contains(p)]
        return SubsphereComplementRegion.make(r1.n, subs, pts)
    raise UnsupportedRegionCombination(
        "union of %s and %s is not representable exactly"
        % (type(r1).__name__, type(r2).__name__))


def _arc_union_with_points(arc_region, points):
    extra = [p for p in points if not arc_region.contains(p)]
    bounds = list(arc_region.boundaries)
    b_in = list(arc_region.boundary_in)
    a_in = list(arc_region.arc_in)
    region = arc_region
    for p in extra:
        kind, i = region._locate(p)
        if kind == "boundary":
            b_in = list(region.boundary_in)
            b_in[i] = True
            region = paint_region(region.boundaries, tuple(b_in),
                                  region.arc_in)
        else:
            bounds = list(region.boundaries)
            b_in = list(region.boundary_in)
            a_in = list(region.arc_in)
            bounds.insert(i + 1, p)
            b_in.insert(i + 1, True)
            a_in.insert(i + 1, a_in[i])
            region = paint_region(tuple(bounds), tuple(b_in), tuple(a_in))
        if not isinstance(region, ArcUnionRegion):
            return region
    return region


def complement(r):
    if isinstance(r, EmptyRegion):
        return all_region(r.dim)
    if isinstance(r, AllRegion):
        return EmptyRegion(r.dim)
    if isinstance(r, ArcUnionRegion):
        return paint_region(r.boundaries,
                            tuple(not x for x in r.boundary_in),
                            tuple(not x for x in r.arc_in))
    if isinstance(r, PointSetRegion):
        if r.ambient is None:
            raise UnsupportedRegionCombination(
                "complement of a point set needs the ambient sphere points")
        return PointSetRegion(r.dim,
                              frozenset(r.ambient) - r.points, r.ambient)
    raise UnsupportedRegionCombination(
        "complement of %s is not representable exactly" % type(r).__name__)


def antipode(r):
    if isinstance(r, (EmptyRegion, AllRegion)):
        return r
    if isinstance(r, PointSetRegion):
        amb = tuple(-d for d in r.ambient) if r.ambient is not None else None
        return PointSetRegion(r.dim, frozenset(-d for d in r.points), amb)
    if isinstance(r, ArcUnionRegion):
        neg = [(-d, bi, ai) for d, bi, ai in
               zip(r.boundaries, r.boundary_in, r.arc_in)]
        return paint_region(tuple(t[0] for t in neg),
                            tuple(t[1] for t in neg),
                            tuple(t[2] for t in neg))
    if isinstance(r, SubsphereComplementRegion):
        return SubsphereComplementRegion.make(
            r.n, r.subspheres, tuple(-p for p in r.complement_points))
    raise UnsupportedRegionCombination("antipode of %s" % type(r).__name__)


def region_from_json(data):
    kind = data["kind"]
    if kind == "empty":
        return EmptyRegion(data["dim"])
    if kind == "all":
        return all_region(data["dim"])
    if kind == "point_set":
        pts = frozenset(Direction(tuple(p)) for p in data["points"])
        amb = None
        if data.get("ambient") is not None:
            amb = tuple(Direction(tuple(p)) for p in data["ambient"])
        return PointSetRegion(data["dim"], pts, amb)
    if kind == "complement_of_subspheres":
        n = data.get("n")
        if n is None:
            subs = data["subspheres"]
            n = len(subs[0][0]) if subs and subs[0] else len(
                data.get("points", [[]])[0])
        return SubsphereComplementRegion.make(
            n,
            [tuple(tuple(x) for x in u) for u in data["subspheres"]],
            [tuple(p) for p in data.get("points", [])])
    if kind == "arc_union":
        bounds = {}
        for arc in data["arcs"]:
            for key in ("from", "to"):
                d = Direction(tuple(arc[key]))
                bounds.setdefault(d, False)
            if arc["from_closed"]:
                bounds[Direction(tuple(arc["from"]))] = True
            if arc["to_closed"]:
                bounds[Direction(tuple(arc["to"]))] = True
        for p in data.get("points", []):
            bounds[Direction(tuple(p))] = True
        blist = sorted(bounds, key=angle_key)
        if not blist:
            return EmptyRegion(1)
        arcs = [(Direction(tuple(a["from"])), Direction(tuple(a["to"])))
                for a in data["arcs"]]

        def cell_in(after):
            for fr, to in arcs:
                if after == fr or ccw_strictly_between(fr, after, to):
                    return True
            return False

        b_in = [bounds[d] for d in blist]
        a_in = [cell_in(d) for d in blist]
        return paint_region(tuple(blist), tuple(b_in), tuple(a_in))
    raise PreconditionError("unknown region kind %r" % kind, module="regions")


def region_to_json(region):
    return _json.dumps(region.to_json_dict(), sort_keys=True)


def region_to_svg(region, size=400):
    """Unit circle with member arcs stroked and member points dotted.

    Rendering is the one place floats are allowed; the mathematical
    content stays exact elsewhere.
    """
    if region.dim != 1 and not isinstance(region, (AllRegion, EmptyRegion)):
        raise PreconditionError("SVG emitter covers dim-1 regions",
                                module="regions")
    c = size / 2.0
    rad = size * 0.4
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
             'viewBox="0 0 %d %d">' % (size, size, size, size)]
    parts.append('<circle cx="%g" cy="%g" r="%g" fill="none" '
                 'stroke="#999" stroke-width="1"/>' % (c, c, rad))

    def xy(theta):
        return (c + rad * cos(theta), c - rad * sin(theta))

    def emit_arc(t0, t1):
        if t1 <= t0:
            t1 += 2 * pi
        x0, y0 = xy(t0)
        x1, y1 = xy(t1)
        large = 1 if (t1 - t0) > pi else 0
        parts.append('<path d="M %g %g A %g %g 0 %d 0 %g %g" fill="none" '
                     'stroke="#cc0000" stroke-width="5"/>'
                     % (x0, y0, rad, rad, large, x1, y1))

    def emit_dot(theta, member=True):
        x, y = xy(theta)
        parts.append('<circle cx="%g" cy="%g" r="4" fill="%s"/>'
                     % (x, y, "#cc0000" if member else "#ffffff"))
        if not member:
            parts.append('<circle cx="%g" cy="%g" r="4" fill="none" '
                         'stroke="#cc0000" stroke-width="1.5"/>' % (x, y))

    if isinstance(region, AllRegion):
        parts.append('<circle cx="%g" cy="%g" r="%g" fill="none" '
                     'stroke="#cc0000" stroke-width="5"/>' % (c, c, rad))
    elif isinstance(region, ArcUnionRegion):
        arcs, points = region.arcs_and_points()
        for (a, b, fc, tc) in arcs:
            t0 = atan2(a.vector[1], a.vector[0])
            t1 = atan2(b.vector[1], b.vector[0])
            emit_arc(t0, t1)
            emit_dot(t0, fc)
            emit_dot(t1, tc)
        for p in points:
            emit_dot(atan2(p.vector[1], p.vector[0]), True)
    elif isinstance(region, PointSetRegion):
        for p in sorted(region.points, key=lambda d: d.vector):
            emit_dot(atan2(p.vector[1], p.vector[0]), True)
    parts.append("</svg>")
    return "\n".join(parts)
