"""Complete decision procedure for the invariant of one-relator groups.

The heart is the point test: for a cyclically reduced two-generator
relator r and a character chi killing its exponent vector, membership is
read off the cyclic minimum count of the chi-track of r (exactly twice if
one generator value is zero, exactly once otherwise).  The full-circle
computation sweeps the rank-2 character circle using the convex hull of
the relator's closed lattice path: between hull-edge inward normals the
supporting vertex set is constant, so one sample per gap decides a whole
arc.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from .characters import (Character, cyclic_min_stats, track)
from .errors import PreconditionError
from .regions import (Direction, EmptyRegion, all_region, region_from_sweep)
from .words import exponent_vector, is_cyclically_reduced


class OneRelatorClass(enum.Enum):
    TWO_GEN_BOTH_LETTERS = "TwoGenBothLetters"
    CYCLIC = "Cyclic"
    FREE_PRODUCT_EMPTY = "FreeProductEmpty"
    MANY_GENS_EMPTY = "ManyGensEmpty"
    FREE_GROUP = "FreeGroup"


def classify_one_relator(presentation):
    """Degenerate-case classification; the full invariant follows from it:

    Cyclic -> all of S(G); FreeProductEmpty, ManyGensEmpty, FreeGroup ->
    empty; TwoGenBothLetters -> decide with the point test / full circle.
    """
    if len(presentation.relators) > 1:
        raise PreconditionError("classification needs at most one relator",
                                module="brown")
    m = presentation.n_generators
    r = presentation.relators[0] if presentation.relators else None
    if r is not None and r.is_empty():
        r = None
    if r is None:
        return OneRelatorClass.CYCLIC if m == 1 else OneRelatorClass.FREE_GROUP
    if m == 1:
        return OneRelatorClass.CYCLIC
    if m >= 3:
        return OneRelatorClass.MANY_GENS_EMPTY
    used = {g for g, _ in r}
    if len(used) == 2:
        return OneRelatorClass.TWO_GEN_BOTH_LETTERS
    # single-generator relator, cyclically reduced: a power a^l
    if len(r) == 1:
        return OneRelatorClass.CYCLIC
    return OneRelatorClass.FREE_PRODUCT_EMPTY


def _check_point_test_input(r, chi):
    if not is_cyclically_reduced(r):
        raise PreconditionError("relator must be cyclically reduced",
                                module="brown")
    used = {g for g, _ in r}
    if used != {0, 1}:
        raise PreconditionError("relator must involve both generators",
                                module="brown")
    values = chi.values if isinstance(chi, Character) else tuple(
        Fraction(v) for v in chi)
    if len(values) != 2:
        raise PreconditionError("character must have exactly two values",
                                module="brown")
    if all(v == 0 for v in values):
        raise PreconditionError("character must be nonzero", module="brown")
    ev = exponent_vector(r, 2)
    if values[0] * ev[0] + values[1] * ev[1] != 0:
        raise PreconditionError(
            "character does not kill the relator exponent vector",
            module="brown")
    return values


def brown_point_test(r, chi):
    """Membership of [chi] for the one-relator group on two generators."""
    values = _check_point_test_input(r, chi)
    stats = cyclic_min_stats(track(r, values))
    if values[0] == 0 or values[1] == 0:
        return stats.multiplicity == 2
    return stats.multiplicity == 1


@dataclass(frozen=True)
class LatticePath:
    """Closed unit-step path in Z^2 traced by a rank-2 relator.

    vertices[0] is the origin; vertices[j] is the image of the j-th
    letterwise prefix, with multiplicity; vertices[-1] is the origin again.
    """

    vertices: tuple

    def interior_vertices(self):
        """The cyclic vertex list v_1..v_k (the origin counted once)."""
        return self.vertices[1:]


def relator_to_lattice_path(r):
    ev = exponent_vector(r, max(2, r.max_index() + 1))
    if len(ev) != 2:
        raise PreconditionError("lattice paths need two generators",
                                module="brown")
    if ev != (0, 0):
        raise PreconditionError(
            "relator exponent sums %r are nonzero" % (ev,), module="brown")
    x = y = 0
    verts = [(0, 0)]
    for g, s in r:
        if g == 0:
            x += s
        else:
            y += s
        verts.append((x, y))
    return LatticePath(tuple(verts))


def convex_hull(points):
    """Andrew's monotone chain on integer points; ccw-ordered hull corners."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def hull_edge_normals(path):
    """Inward primitive normals of the hull edges of the path's vertex set.

    These are exactly the directions whose minimizing support contains more
    than one hull corner; between two consecutive normals the minimizer is
    one fixed vertex.
    """
    hull = convex_hull(path.vertices)
    if len(hull) < 3:
        raise PreconditionError(
            "degenerate hull; the relator must involve both generators",
            module="brown")
    normals = []
    m = len(hull)
    for i in range(m):
        px, py = hull[i]
        qx, qy = hull[(i + 1) % m]
        dx, dy = qx - px, qy - py
        normals.append(Direction.from_vector((-dy, dx)))
    return normals


def brown_full_circle(r):
    """The invariant of the rank-2 one-relator group as an exact arc union."""
    path = relator_to_lattice_path(r)
    used = {g for g, _ in r}
    if used != {0, 1}:
        raise PreconditionError("relator must involve both generators",
                                module="brown")
    criticals = hull_edge_normals(path)

    def member(d):
        return brown_point_test(r, tuple(Fraction(x) for x in d.vector))

    return region_from_sweep(criticals, member)


def one_relator_region(presentation):
    """Invariant of any one-relator presentation, all degenerate cases in.

    Returns a SphereRegion over the presentation's character coordinates
    (dim r0 - 1).  The rank-2 two-generator case runs the full sweep.
    """
    from .characters import abelianization

    kind = classify_one_relator(presentation)
    rank, _basis = abelianization(presentation)
    dim = rank - 1
    if kind is OneRelatorClass.CYCLIC:
        return all_region(dim)
    if kind in (OneRelatorClass.FREE_PRODUCT_EMPTY,
                OneRelatorClass.MANY_GENS_EMPTY,
                OneRelatorClass.FREE_GROUP):
        return EmptyRegion(dim)
    if rank == 2:
        return brown_full_circle(presentation.relators[0])
    # rank 1 with both letters: the sphere has two points; decide each
    from .regions import PointSetRegion
    basis = _basis[0]
    plus = Direction.from_vector(basis)
    members = [d for d in (plus, -plus)
               if brown_point_test(presentation.relators[0],
                                   [Fraction(x) for x in d.vector])]
    ambient = (plus, -plus)
    return PointSetRegion(0, frozenset(members), ambient)
