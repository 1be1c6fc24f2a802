"""
Exact algebra of words in the three letters e_0, e_1, e_z.

A ``Word`` is an immutable tuple of ``Letter``; a ``LinComb`` is a finitely
supported map Word -> Fraction kept in canonical form (no zero coefficients,
terms ordered lexicographically).  Multiplication of LinCombs is the bilinear
extension of word concatenation.
"""

from __future__ import annotations

import itertools
import re
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Letter", "Word", "LinComb", "KIndex", "WordParseError",
    "is_convergent", "concat", "tau", "tau_infinity", "partial",
    "substitute_ez_zero", "enumerate_convergent", "mzv_word", "word_to_kindex",
    "parse_word", "format_word", "parse_lincomb", "as_lincomb",
    "MAX_ENUM_WEIGHT",
]

MAX_ENUM_WEIGHT = 12


class Letter(IntEnum):
    ZERO = 0
    ONE = 1
    Z = 2

    def __str__(self) -> str:
        return _LETTER_TEXT[self]


_LETTER_TEXT = {Letter.ZERO: "0", Letter.ONE: "1", Letter.Z: "z"}
_TEXT_LETTER = {"0": Letter.ZERO, "1": Letter.ONE, "z": Letter.Z, "Z": Letter.Z}


class WordParseError(ValueError):
    """Malformed word or linear-combination text.

    ``position`` is the 1-based token index for word text, or the character
    offset for linear-combination text.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at {position})")
        self.position = position


class Word(tuple):
    """Sequence of letters; the empty word is the unit."""

    def __new__(cls, letters: Iterable = ()):
        return super().__new__(cls, (Letter(a) for a in letters))

    @property
    def weight(self) -> int:
        return len(self)

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)))

    def __getitem__(self, item):
        res = tuple.__getitem__(self, item)
        return Word(res) if isinstance(item, slice) else res

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word('{format_word(self)}')"


def _coerce_coeff(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("LinComb coefficients must be exact (int or Fraction)")
    return c if isinstance(c, Fraction) else Fraction(c)


class LinComb:
    """Rational linear combination of words.

    Immutable; arithmetic returns new instances.  ``x * y`` is concatenation
    when both are LinComb/Word, scaling when one side is a number.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        acc: dict[Word, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                c = _coerce_coeff(c)
                if c == 0:
                    continue
                w = w if isinstance(w, Word) else Word(w)
                s = acc.get(w, 0) + c
                if s == 0:
                    del acc[w]
                else:
                    acc[w] = s
        self._terms = dict(sorted(acc.items()))
        self._hash = None

    @classmethod
    def word(cls, w, coeff=1) -> "LinComb":
        return cls({Word(w): coeff})

    @classmethod
    def one(cls) -> "LinComb":
        return cls({Word(): 1})

    @classmethod
    def letter(cls, a: Letter) -> "LinComb":
        return cls({Word((a,)): 1})

    # mapping-ish access
    def items(self):
        return self._terms.items()

    def words(self) -> list[Word]:
        return list(self._terms)

    def coeff(self, w) -> Fraction:
        return self._terms.get(Word(w), Fraction(0))

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            other = LinComb.word(other)
        elif isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # vector space
    def __add__(self, other) -> "LinComb":
        other = as_lincomb(other)
        return LinComb(itertools.chain(self.items(), other.items()))

    __radd__ = __add__

    def __neg__(self) -> "LinComb":
        return LinComb((w, -c) for w, c in self.items())

    def __sub__(self, other) -> "LinComb":
        return self + (-as_lincomb(other))

    def __rsub__(self, other) -> "LinComb":
        return as_lincomb(other) - self

    def __mul__(self, other) -> "LinComb":
        if isinstance(other, (LinComb, Word)):
            return concat(self, other)
        c = _coerce_coeff(other)
        return LinComb((w, c * v) for w, v in self.items())

    def __rmul__(self, other) -> "LinComb":
        if isinstance(other, Word):
            return concat(other, self)
        return self.__mul__(other)

    def __pow__(self, n: int) -> "LinComb":
        if n < 0:
            raise ValueError("negative power")
        res = LinComb.one()
        for _ in range(n):
            res = concat(res, self)
        return res

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (w, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"[{format_word(w)}]" if mag == 1 else f"{mag}*[{format_word(w)}]"
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LinComb('{self}')"


def as_lincomb(x) -> LinComb:
    if isinstance(x, LinComb):
        return x
    if isinstance(x, Word):
        return LinComb.word(x)
    if isinstance(x, (int, Fraction)):
        return LinComb({Word(): x})
    if isinstance(x, (tuple, list)):
        return LinComb.word(Word(x))
    raise TypeError(f"cannot interpret {type(x).__name__} as LinComb")


class KIndex(tuple):
    """Admissible index (k_1, ..., k_r): all parts >= 1 and k_r >= 2."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(k) for k in parts)
        if not parts:
            raise ValueError("empty index")
        if any(k < 1 for k in parts):
            raise ValueError(f"index parts must be positive: {parts}")
        if parts[-1] < 2:
            raise ValueError(f"inadmissible index {parts}: last part must be >= 2")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def depth(self) -> int:
        return len(self)


def is_convergent(w) -> bool:
    w = tuple(w)
    if not w:
        return True
    return w[0] != Letter.ZERO and w[-1] != Letter.ONE


def concat(x, y) -> LinComb:
    x, y = as_lincomb(x), as_lincomb(y)
    out: dict[Word, Fraction] = {}
    for u, a in x.items():
        for v, b in y.items():
            w = u + v
            out[w] = out.get(w, 0) + a * b
    return LinComb(out)


def _anti_morphism(x, images: dict) -> LinComb:
    # images[letter] is a list of (letter, coeff); a word maps to the product
    # of letter images in reversed order
    out: dict[Word, Fraction] = {}
    for w, c in as_lincomb(x).items():
        factors = [images[a] for a in reversed(w)]
        for combo in itertools.product(*factors):
            coeff = c
            letters = []
            for a, s in combo:
                coeff *= s
                letters.append(a)
            key = Word(letters)
            out[key] = out.get(key, 0) + coeff
    return LinComb(out)


_TAU = {
    Letter.ZERO: [(Letter.Z, 1), (Letter.ONE, -1)],
    Letter.ONE: [(Letter.Z, 1), (Letter.ZERO, -1)],
    Letter.Z: [(Letter.Z, 1)],
}
_TAU_INF = {
    Letter.ZERO: [(Letter.ONE, -1)],
    Letter.ONE: [(Letter.ZERO, -1)],
    Letter.Z: [],
}


def tau(x) -> LinComb:
    """Duality anti-automorphism: e0 -> ez - e1, e1 -> ez - e0, ez -> ez."""
    return _anti_morphism(x, _TAU)


def tau_infinity(x) -> LinComb:
    """Degenerate duality at z = oo: e0 -> -e1, e1 -> -e0, ez -> 0."""
    return _anti_morphism(x, _TAU_INF)


def partial(x: Letter, y: Letter, v) -> LinComb:
    """Derivation d_{x,y} on convergent words.

    Deleting letter i contributes delta({a_i, a_{i+1}}, {x, y}) minus
    delta({a_{i-1}, a_i}, {x, y}), with a_0 = 0 and a_{n+1} = 1.
    """
    target = frozenset((Letter(x), Letter(y)))
    out: dict[Word, Fraction] = {}
    for w, c in as_lincomb(v).items():
        if not is_convergent(w):
            raise ValueError(f"partial is defined on convergent words only; got [{w}]")
        padded = (Letter.ZERO,) + tuple(w) + (Letter.ONE,)
        for i in range(1, len(w) + 1):
            d = (frozenset(padded[i:i + 2]) == target) - (frozenset(padded[i - 1:i + 1]) == target)
            if d:
                key = Word(w[:i - 1] + w[i:])
                out[key] = out.get(key, 0) + d * c
    return LinComb(out)


def substitute_ez_zero(x) -> LinComb:
    return LinComb((w, c) for w, c in as_lincomb(x).items() if Letter.Z not in w)


def enumerate_convergent(weight: int, max_weight: int = MAX_ENUM_WEIGHT) -> list[Word]:
    """All convergent words of the given weight, in lexicographic order."""
    if weight < 0:
        raise ValueError("weight must be nonnegative")
    if weight > max_weight:
        raise ValueError(
            f"refusing to enumerate weight {weight} (> {max_weight}); "
            f"that is {4 * 3 ** (weight - 2)} words"
        )
    if weight == 0:
        return [Word()]
    if weight == 1:
        return [Word((Letter.Z,))]
    first = (Letter.ONE, Letter.Z)
    last = (Letter.ZERO, Letter.Z)
    # nested loops in ascending letter order already give lexicographic order
    return [
        Word((a,) + mid + (b,))
        for a in first
        for mid in itertools.product(Letter, repeat=weight - 2)
        for b in last
    ]


def mzv_word(idx) -> Word:
    """e1 e0^{k1-1} ... e1 e0^{kr-1} for an admissible index."""
    idx = idx if isinstance(idx, KIndex) else KIndex(idx)
    letters: list[Letter] = []
    for k in idx:
        letters.append(Letter.ONE)
        letters.extend([Letter.ZERO] * (k - 1))
    return Word(letters)


def word_to_kindex(w) -> KIndex:
    """Inverse of mzv_word on convergent words in e0, e1."""
    w = tuple(w)
    if not w or Letter.Z in w or not is_convergent(w):
        raise ValueError(f"[{format_word(w)}] is not a convergent word in e0, e1")
    parts = []
    for a in w:
        if a == Letter.ONE:
            parts.append(1)
        else:
            parts[-1] += 1
    return KIndex(parts)


_SEP = re.compile(r"\s*,\s*|\s+")


def parse_word(text: str) -> Word:
    """Parse ``"z,1,0"`` or ``"1 0"``; blank text is the empty word."""
    s = text.strip()
    if not s:
        return Word()
    letters = []
    for i, tok in enumerate(_SEP.split(s), start=1):
        if tok == "":
            raise WordParseError("empty token", i)
        if tok not in _TEXT_LETTER:
            raise WordParseError(f"unknown letter {tok!r}", i)
        letters.append(_TEXT_LETTER[tok])
    return Word(letters)


def format_word(w) -> str:
    return ",".join(_LETTER_TEXT[Letter(a)] for a in w)


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?\s*(?P<star>\*)?\s*)?"
    r"(?:\[(?P<word>[^\]]*)\])?\s*"
)


def parse_lincomb(text: str) -> LinComb:
    """Parse e.g. ``3/2*[z,1,0] - [1,z,0]``; ``0`` is the zero combination."""
    pos, n = 0, len(text)
    terms = []
    first = True
    if text.strip() == "0":
        return LinComb()
    while True:
        m = _TERM.match(text, pos)
        if pos >= n or m is None or m.end() == pos:
            if first or pos < n:
                raise WordParseError("expected a term", pos)
            break
        if not first and m.group("sign") is None:
            raise WordParseError("expected '+' or '-' between terms", pos)
        if m.group("word") is None:
            if m.group("num") is None or m.group("star"):
                raise WordParseError("expected '[word]'", m.end())
            word = Word()
        else:
            try:
                word = parse_word(m.group("word"))
            except WordParseError as exc:
                raise WordParseError(f"bad word: {exc}", m.start("word")) from None
        c = Fraction(1)
        if m.group("num") is not None:
            den = int(m.group("den")) if m.group("den") else 1
            if den == 0:
                raise WordParseError("zero denominator", m.start("den"))
            c = Fraction(int(m.group("num")), den)
        if m.group("sign") == "-":
            c = -c
        terms.append((word, c))
        first = False
        pos = m.end()
        if pos >= n:
            break
    return LinComb(terms)
