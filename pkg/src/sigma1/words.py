"""Free-group words, reduction, and the presentation data model with parser.

Words are immutable sequences of letters; a letter is a pair
(generator_index, sign) with a 0-based index and sign +1 or -1.  Powers are
always stored exploded: a^2 is two letters.  All track and minimum
computations elsewhere in the package are letterwise, so nothing here
groups letters into syllables.
"""

from dataclasses import dataclass, field

from .errors import ParseError, UnknownGeneratorError, InputError


@dataclass(frozen=True)
class Word:
    """A (not necessarily reduced) word in a free group."""

    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(
            (int(g), int(s)) for (g, s) in self.letters))
        for g, s in self.letters:
            if s not in (1, -1):
                raise InputError("letter sign must be +1 or -1", module="words")
            if g < 0:
                raise InputError("letter index must be >= 0", module="words")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __mul__(self, other):
        """Concatenation, without free reduction."""
        return Word(self.letters + other.letters)

    def is_empty(self):
        return not self.letters

    def max_index(self):
        return max((g for g, _ in self.letters), default=-1)


EMPTY_WORD = Word(())


def word(*letters):
    return Word(tuple(letters))


def reduce(w):
    """Freely reduce: cancel adjacent mutually inverse letters until none remain."""
    out = []
    for g, s in w.letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return Word(tuple(out))


def invert(w):
    return Word(tuple((g, -s) for g, s in reversed(w.letters)))


def is_reduced(w):
    return len(reduce(w)) == len(w)


def is_cyclically_reduced(w):
    if not is_reduced(w):
        return False
    if len(w) >= 2:
        (g0, s0), (gk, sk) = w.letters[0], w.letters[-1]
        if g0 == gk and s0 == -sk:
            return False
    return True


def cyclically_reduce(w):
    """Return (core, conjugator) with conjugator * core * conjugator^-1
    freely equal to w and core cyclically reduced."""
    r = reduce(w)
    letters = list(r.letters)
    prefix = []
    while len(letters) >= 2 and letters[0][0] == letters[-1][0] \
            and letters[0][1] == -letters[-1][1]:
        prefix.append(letters.pop(0))
        letters.pop()
    return Word(tuple(letters)), Word(tuple(prefix))


def cyclic_permutation(w, k):
    """Move the first k letters to the end: (abc, 1) -> bca."""
    n = len(w)
    if n == 0:
        if k == 0:
            return w
        raise InputError("cyclic_permutation of the empty word needs k = 0",
                         module="words")
    if not 0 <= k < n:
        raise InputError("cyclic_permutation needs 0 <= k < len(w)",
                         module="words")
    return Word(w.letters[k:] + w.letters[:k])


def exponent_vector(w, n_gens):
    vec = [0] * n_gens
    for g, s in w.letters:
        if g >= n_gens:
            raise InputError("letter index %d out of range for %d generators"
                             % (g, n_gens), module="words")
        vec[g] += s
    return tuple(vec)


@dataclass(frozen=True)
class Presentation:
    """Generators plus cyclically reduced relators, with exponent matrix."""

    generator_names: tuple
    relators: tuple
    exponent_matrix: tuple = field(default=())

    def __post_init__(self):
        names = tuple(self.generator_names)
        if not names:
            raise InputError("empty generator list", module="words")
        if len(set(names)) != len(names):
            raise InputError("duplicate generator name", module="words")
        rels = tuple(cyclically_reduce(r)[0] for r in self.relators)
        for r in rels:
            if r.max_index() >= len(names):
                raise UnknownGeneratorError(
                    "relator uses a generator index beyond the declared list")
        mat = tuple(exponent_vector(r, len(names)) for r in rels)
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "relators", rels)
        object.__setattr__(self, "exponent_matrix", mat)

    @property
    def n_generators(self):
        return len(self.generator_names)

    def generator_index(self, name):
        try:
            return self.generator_names.index(name)
        except ValueError:
            raise UnknownGeneratorError("unknown generator %r" % name)

    def format_word(self, w):
        if w.is_empty():
            return "1"
        parts = []
        for g, s in w.letters:
            name = self.generator_names[g]
            parts.append(name if s == 1 else name + "^-1")
        return " ".join(parts)

    def __repr__(self):
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return "< %s | %s >" % (" ".join(self.generator_names), rels)


def _is_identifier(tok):
    return tok and tok[0].isalpha() and all(
        c.isalnum() or c == "_" for c in tok)


def _tokenize(text):
    """Split presentation text into (token, position) pairs.

    Structural characters < | , > delimit themselves; everything else is
    whitespace-separated.  '^' stays attached to its token.
    """
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "<|,>":
            tokens.append((c, i))
            i += 1
            continue
        j = i
        while j < n and not text[j].isspace() and text[j] not in "<|,>":
            j += 1
        tokens.append((text[i:j], i))
        i = j
    return tokens


def _expand_token(tok, pos, name_to_index):
    """Turn a word token like `a` or `b^-3` into exploded letters."""
    if "^" in tok:
        name, _, exp = tok.partition("^")
        if not _is_identifier(name):
            raise ParseError("bad token %r" % tok, pos)
        try:
            e = int(exp)
        except ValueError:
            raise ParseError("bad exponent in %r" % tok, pos)
    else:
        name, e = tok, 1
        if not _is_identifier(name):
            raise ParseError("bad token %r" % tok, pos)
    if name not in name_to_index:
        raise UnknownGeneratorError("unknown generator %r" % name)
    g = name_to_index[name]
    sign = 1 if e >= 0 else -1
    return [(g, sign)] * abs(e)


def parse_word(text, generator_names):
    """Parse a bare word (sequence of tokens) over the given generators."""
    name_to_index = {n: i for i, n in enumerate(generator_names)}
    letters = []
    for tok, pos in _tokenize(text):
        if tok in "<|,>":
            raise ParseError("unexpected %r in word" % tok, pos)
        letters.extend(_expand_token(tok, pos, name_to_index))
    return Word(tuple(letters))


def parse_presentation(text):
    """Parse `< gen+ | relator-list? >` into a Presentation.

    Grammar: gen := identifier (letter first, then letters/digits/_);
    relator-list := word (',' word)*; word := token+;
    token := identifier ('^' signed-integer)?.  `a^-3` expands to three
    letters (a, -1).  Relators are stored cyclically reduced.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input", 0)
    k = 0

    def peek():
        return tokens[k] if k < len(tokens) else (None, len(text))

    tok, pos = peek()
    if tok != "<":
        raise ParseError("expected '<'", pos)
    k += 1
    names = []
    while True:
        tok, pos = peek()
        if tok is None:
            raise ParseError("unterminated presentation, expected '|' or '>'", pos)
        if tok == "|" or tok == ">":
            break
        if not _is_identifier(tok):
            raise ParseError("bad generator name %r" % tok, pos)
        names.append(tok)
        k += 1
    if not names:
        raise ParseError("empty generator list", pos)
    name_to_index = {n: i for i, n in enumerate(names)}

    relators = []
    tok, pos = peek()
    if tok == "|":
        k += 1
        current = []
        current_tokens = 0
        while True:
            tok, pos = peek()
            if tok is None:
                raise ParseError("unterminated presentation, expected '>'", pos)
            if tok == ">":
                break
            if tok == ",":
                if current_tokens == 0:
                    raise ParseError("empty relator", pos)
                relators.append(Word(tuple(current)))
                current = []
                current_tokens = 0
                k += 1
                continue
            if tok in "<|":
                raise ParseError("unexpected %r" % tok, pos)
            current.extend(_expand_token(tok, pos, name_to_index))
            current_tokens += 1
            k += 1
        if current_tokens:
            relators.append(Word(tuple(current)))
        elif relators:
            raise ParseError("trailing comma in relator list", pos)
    tok, pos = peek()
    if tok != ">":
        raise ParseError("expected '>'", pos)
    if k + 1 != len(tokens):
        raise ParseError("trailing input after '>'", tokens[k + 1][1])
    return Presentation(tuple(names), tuple(relators))
