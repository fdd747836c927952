"""Shared random generators for the test suite (all seeded by callers)."""

import random
from fractions import Fraction

from sigma1.words import Word, cyclically_reduce, exponent_vector, reduce


def random_word(rng, n_gens, max_len):
    k = rng.randint(0, max_len)
    return Word(tuple((rng.randrange(n_gens), rng.choice((1, -1)))
                      for _ in range(k)))


def random_reduced_word(rng, n_gens, max_len):
    return reduce(random_word(rng, n_gens, max_len))


def random_rank2_relator(rng, max_len=14):
    """Cyclically reduced two-generator word with zero exponent sums and
    both generators present."""
    while True:
        half = rng.randint(2, max_len // 2)
        letters = []
        for _ in range(half):
            letters.append((rng.randrange(2), rng.choice((1, -1))))
        # balance the exponent sums by appending inverses in random order
        balance = []
        for g in range(2):
            s = sum(sign for gg, sign in letters if gg == g)
            balance.extend([(g, -1 if s > 0 else 1)] * abs(s))
        rng.shuffle(balance)
        w = Word(tuple(letters + balance))
        core, _ = cyclically_reduce(w)
        if core.is_empty() or len(core) > max_len:
            continue
        if {g for g, _ in core} != {0, 1}:
            continue
        if exponent_vector(core, 2) != (0, 0):
            continue
        return core


def random_two_gen_relator(rng, max_len=14):
    """Cyclically reduced word using both generators (any exponent sums)."""
    while True:
        w = random_word(rng, 2, max_len)
        core, _ = cyclically_reduce(w)
        if not core.is_empty() and {g for g, _ in core} == {0, 1}:
            return core


def random_rational(rng, allow_zero=True, span=3):
    if allow_zero and rng.random() < 0.3:
        return Fraction(0)
    num = rng.randint(-span, span)
    if num == 0:
        num = rng.choice((-1, 1))
    return Fraction(num, rng.randint(1, 3))


def random_character(rng, n, allow_zero_entries=True):
    while True:
        values = tuple(random_rational(rng, allow_zero_entries)
                       for _ in range(n))
        if any(v != 0 for v in values):
            return values


def kernel_character(rng, basis):
    """Random nonzero rational combination of the given kernel basis rows."""
    n = len(basis[0])
    while True:
        coeffs = [random_rational(rng) for _ in basis]
        values = tuple(sum((c * Fraction(row[g]) for c, row in
                            zip(coeffs, basis)), Fraction(0))
                       for g in range(n))
        if any(v != 0 for v in values):
            return values
