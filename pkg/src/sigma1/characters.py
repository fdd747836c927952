"""The character space Hom(G, R) over exact rationals.

A character is represented by its rational values on the generators; it is
valid for a presentation exactly when it kills every relator's exponent
vector (characters factor through the abelianization).  Sphere points are
primitive integer direction vectors.  The chi-track of a word lists the
chi-values of its letterwise prefixes; v_chi additionally takes the empty
prefix (value 0) into account.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg
from .errors import (DimensionMismatchError, InvalidCharacterError,
                     PreconditionError, ZeroPullbackError)
from .words import exponent_vector, invert


def as_rationals(values):
    return tuple(Fraction(v) for v in values)


def dot(a, b):
    if len(a) != len(b):
        raise DimensionMismatchError(
            "vectors of length %d and %d" % (len(a), len(b)))
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)),
               Fraction(0))


@dataclass(frozen=True)
class Character:
    """Rational character given by its values on the generators."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", as_rationals(self.values))

    @classmethod
    def for_presentation(cls, presentation, values):
        chi = cls(tuple(values))
        chi.validate(presentation)
        return chi

    def validate(self, presentation):
        if len(self.values) != presentation.n_generators:
            raise DimensionMismatchError(
                "character has %d values for %d generators"
                % (len(self.values), presentation.n_generators))
        for row in presentation.exponent_matrix:
            if dot(self.values, row) != 0:
                raise InvalidCharacterError(
                    "character does not kill relator exponent vector %r"
                    % (row,))
        return self

    def is_zero(self):
        return all(v == 0 for v in self.values)

    def __len__(self):
        return len(self.values)

    def __call__(self, letter):
        g, s = letter
        return self.values[g] * s

    def of_word(self, w):
        return sum((self(letter) for letter in w), Fraction(0))

    def scaled(self, q):
        q = Fraction(q)
        if q <= 0:
            raise PreconditionError("scaling must be by a positive rational",
                                    module="characters")
        return Character(tuple(v * q for v in self.values))

    def __neg__(self):
        return Character(tuple(-v for v in self.values))


def _chi_values(chi):
    if isinstance(chi, Character):
        return chi.values
    return as_rationals(chi)


@dataclass(frozen=True)
class Track:
    """Prefix chi-values of a word: entry i is chi(s_1 ... s_{i+1})."""

    prefix_sums: tuple

    def __len__(self):
        return len(self.prefix_sums)

    def __iter__(self):
        return iter(self.prefix_sums)

    def __getitem__(self, i):
        return self.prefix_sums[i]


def track(w, chi):
    values = _chi_values(chi)
    sums = []
    acc = Fraction(0)
    for g, s in w:
        if g >= len(values):
            raise DimensionMismatchError(
                "letter index %d out of range for character of length %d"
                % (g, len(values)))
        acc += values[g] * s
        sums.append(acc)
    return Track(tuple(sums))


def v_chi(w, chi):
    """min over 0 and all prefix chi-values (the empty prefix counts)."""
    t = track(w, chi)
    return min(t.prefix_sums + (Fraction(0),))


@dataclass(frozen=True)
class CyclicMinStats:
    min_value: Fraction
    positions: tuple  # 1-based indices into the track, sorted
    multiplicity: int
    consecutive: bool


def cyclic_min_stats(t):
    """Minimum data of a track read on the circle Z/kZ (k adjacent to 1)."""
    sums = t.prefix_sums if isinstance(t, Track) else tuple(t)
    if not sums:
        raise PreconditionError("cyclic_min_stats needs a nonempty track",
                                module="characters")
    m = min(sums)
    positions = tuple(i + 1 for i, v in enumerate(sums) if v == m)
    k = len(sums)
    mult = len(positions)
    if mult == k:
        consecutive = True
    else:
        # a single cyclically contiguous block: exactly one "gap" when the
        # successor (cyclically) of a position is not a position
        pos_set = set(positions)
        breaks = sum(1 for p in positions if (p % k) + 1 not in pos_set)
        consecutive = breaks == 1
    return CyclicMinStats(m, positions, mult, consecutive)


def abelianization(presentation):
    """Torsion-free rank of G_ab and a basis of the rational character space.

    The rank comes from the Smith normal form of the exponent matrix; the
    basis spans the null space {v : M v = 0} of that matrix, i.e. exactly
    the vectors of generator values that kill every relator.  An empty
    basis means the character sphere is empty.
    """
    n = presentation.n_generators
    mat = [list(row) for row in presentation.exponent_matrix]
    diag = _linalg.smith_normal_form(mat)
    rank = n - len(diag)
    basis = _linalg.nullspace(mat, n)
    assert len(basis) == rank
    return rank, [tuple(Fraction(x) for x in row) for row in basis]


def abelianization_torsion(presentation):
    """Torsion coefficients (SNF diagonal entries > 1) of G_ab."""
    mat = [list(row) for row in presentation.exponent_matrix]
    return [d for d in _linalg.smith_normal_form(mat) if d > 1]


def pullback(chi, images, n_gens_source, require_nonzero=True):
    """Pull a character back along a homomorphism given on generators.

    `images[g]` is the Word over the target's generators that generator g
    of the source maps to; the result value on g is chi(images[g]).
    """
    values = _chi_values(chi)
    if len(images) != n_gens_source:
        raise DimensionMismatchError(
            "%d generator images for %d generators"
            % (len(images), n_gens_source))
    result = []
    for w in images:
        ev = exponent_vector(w, len(values))
        result.append(dot(values, ev))
    if require_nonzero and all(v == 0 for v in result):
        raise ZeroPullbackError(
            "pullback is identically zero; the requested sphere point "
            "does not exist")
    return Character(tuple(result))


def v_chi_identity_inverse(w, chi):
    """Eq.-style helper used in tests: v(w^-1) computed directly."""
    return v_chi(invert(w), chi)


def reorder_within_band(f, c, b):
    """Permutation keeping all partial sums c + sum f[pi(j)] inside [0, b].

    Preconditions: b >= 2 * max|f_j|, c in [0, b], c + sum(f) in [0, b].
    Returns a list `pi` of indices into f (a permutation of range(len(f))).
    The construction follows a recursive split on the positive and
    negative entries; the side that fits is emitted outright, otherwise a
    prefix of it is emitted until the running value crosses b/2 and the
    rest is handled recursively.
    """
    fs = [Fraction(x) for x in f]
    c = Fraction(c)
    b = Fraction(b)
    big = max((abs(x) for x in fs), default=Fraction(0))
    if b < 2 * big:
        raise PreconditionError("need b >= 2*max|f_j|", module="characters")
    if not 0 <= c <= b:
        raise PreconditionError("need c in [0, b]", module="characters")
    total = c + sum(fs)
    if not 0 <= total <= b:
        raise PreconditionError("need c + sum(f) in [0, b]",
                                module="characters")

    order = []

    def rec(indices, cur):
        if not indices:
            return
        pos = [i for i in indices if fs[i] >= 0]
        neg = [i for i in indices if fs[i] < 0]
        if cur <= b / 2:
            cpos = cur + sum(fs[i] for i in pos)
            if cpos <= b:
                # all positives first, then all negatives: sums rise to
                # cpos <= b then fall monotonically to the total in [0, b]
                order.extend(pos)
                order.extend(neg)
                return
            taken = []
            while cur <= b / 2:
                i = pos.pop(0)
                taken.append(i)
                cur += fs[i]
            order.extend(taken)
            rec(pos + neg, cur)
        else:
            cneg = cur + sum(fs[i] for i in neg)
            if cneg >= 0:
                order.extend(neg)
                order.extend(pos)
                return
            taken = []
            while cur > b / 2:
                i = neg.pop(0)
                taken.append(i)
                cur += fs[i]
            order.extend(taken)
            rec(neg + pos, cur)

    rec(list(range(len(fs))), c)
    assert sorted(order) == list(range(len(fs)))
    # verify the defining property before returning
    acc = c
    for i in order:
        acc += fs[i]
        assert 0 <= acc <= b
    return order
