"""Exact arithmetic in the free associative algebra over the rationals.

Generators x[v,a] carry an input index v and an output index a, packed
into a dense integer id (id = v*outputs + a).  A word is a Python string
whose characters are those ids, so concatenation, hashing, comparison and
subword search all run at C speed.  The empty string is the unit word.

Coefficients are exact rationals: plain ints where the value is integral,
fractions.Fraction otherwise.  Floats never appear.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Union

Word = str
Scalar = Union[int, Fraction]

EMPTY_WORD: Word = ""


class ZeroPolynomialError(ValueError):
    """The zero polynomial was passed where a leading term is required."""


def _norm(c: Scalar) -> Scalar:
    # Integral Fractions collapse to int: cheaper arithmetic, equal value.
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


@dataclass(frozen=True)
class Alphabet:
    """The generator universe x[v,a] with v < vertices, a < outputs."""

    vertices: int
    outputs: int

    def __post_init__(self) -> None:
        if self.vertices < 0 or self.outputs < 0:
            raise ValueError("alphabet dimensions must be nonnegative")
        if self.vertices * self.outputs > 0x10FFFF:
            raise ValueError("alphabet too large for dense letter encoding")

    @property
    def size(self) -> int:
        return self.vertices * self.outputs

    def letter(self, v: int, a: int) -> str:
        if not (0 <= v < self.vertices and 0 <= a < self.outputs):
            raise ValueError(
                f"generator x[{v},{a}] outside the "
                f"{self.vertices}x{self.outputs} universe"
            )
        return chr(v * self.outputs + a)

    def pair(self, ch: str) -> tuple[int, int]:
        return divmod(ord(ch), self.outputs)

    def letters(self) -> Iterator[str]:
        return (chr(g) for g in range(self.size))

    def word(self, pairs: Iterable[tuple[int, int]]) -> Word:
        return "".join(self.letter(v, a) for v, a in pairs)

    def label(self, ch: str) -> str:
        v, a = self.pair(ch)
        return f"x[{v},{a}]"

    def word_label(self, w: Word) -> str:
        if not w:
            return "1"
        return "*".join(self.label(ch) for ch in w)


class DegLexOrder:
    """Graded lexicographic word order.

    Words compare by total degree first, then letter by letter through a
    generator ranking.  The default ranking is the dense id order, i.e.
    x[0,0] < x[0,1] < ... < x[1,0] < ...  The empty word is minimal.
    """

    __slots__ = ("alphabet", "ranking", "_rank_table", "_anti_table")

    def __init__(self, alphabet: Alphabet, ranking: Iterable[int] | None = None):
        self.alphabet = alphabet
        size = alphabet.size
        if ranking is None:
            self.ranking = None
            self._rank_table = None
            self._anti_table = {g: size - 1 - g for g in range(size)}
        else:
            ranking = tuple(ranking)
            if sorted(ranking) != list(range(size)):
                raise ValueError("ranking must be a permutation of all generator ids")
            self.ranking = ranking
            self._rank_table = {g: ranking[g] for g in range(size)}
            self._anti_table = {g: size - 1 - ranking[g] for g in range(size)}

    def key(self, w: Word) -> tuple[int, str]:
        """Sort key: ascending in the order."""
        if self._rank_table is None:
            return (len(w), w)
        return (len(w), w.translate(self._rank_table))

    def heap_key(self, w: Word) -> tuple[int, str]:
        """Sort key that inverts the order, for min-heaps serving max-first."""
        return (-len(w), w.translate(self._anti_table))

    def compare(self, u: Word, w: Word) -> int:
        ku, kw = self.key(u), self.key(w)
        if ku < kw:
            return -1
        if ku > kw:
            return 1
        return 0

    def max_word(self, words: Iterable[Word]) -> Word:
        return max(words, key=self.key)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DegLexOrder)
            and self.alphabet == other.alphabet
            and self.ranking == other.ranking
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.ranking))

    def __repr__(self) -> str:
        extra = "" if self.ranking is None else f", ranking={self.ranking!r}"
        return f"DegLexOrder({self.alphabet!r}{extra})"


def word_compare(order: DegLexOrder, u: Word, w: Word) -> int:
    """Three-way comparison of words: -1, 0 or 1."""
    return order.compare(u, w)


class Poly:
    """A finitely supported map from words to exact rational coefficients."""

    __slots__ = ("_t",)

    def __init__(self, terms: dict[Word, Scalar] | None = None):
        t: dict[Word, Scalar] = {}
        if terms:
            for w, c in terms.items():
                c = _norm(c)
                if c:
                    t[w] = c
        self._t = t

    @classmethod
    def _raw(cls, t: dict[Word, Scalar]) -> "Poly":
        # Internal constructor: t must already be zero-free and normalized.
        p = cls.__new__(cls)
        p._t = t
        return p

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Poly":
        return cls._raw({EMPTY_WORD: 1})

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        c = _norm(c)
        return cls._raw({EMPTY_WORD: c} if c else {})

    @classmethod
    def from_word(cls, w: Word, c: Scalar = 1) -> "Poly":
        c = _norm(c)
        return cls._raw({w: c} if c else {})

    def items(self):
        return self._t.items()

    def words(self):
        return self._t.keys()

    def coefficient(self, w: Word) -> Scalar:
        return self._t.get(w, 0)

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._t == other._t
        return NotImplemented

    __hash__ = None  # mutable-value semantics; compare by ==

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for w, c in b.items():
            acc = out.get(w)
            if acc is None:
                out[w] = c
            else:
                s = acc + c
                if s:
                    out[w] = _norm(s)
                else:
                    del out[w]
        return Poly._raw(out)

    def __neg__(self) -> "Poly":
        return Poly._raw({w: -c for w, c in self._t.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, Poly):
            out: dict[Word, Scalar] = {}
            for u, cu in self._t.items():
                for w, dw in other._t.items():
                    k = u + w
                    c = cu * dw
                    acc = out.get(k)
                    if acc is None:
                        out[k] = c
                    else:
                        s = acc + c
                        if s:
                            out[k] = s
                        else:
                            del out[k]
            return Poly._raw({w: _norm(c) for w, c in out.items()})
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: "Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "Poly":
        c = _norm(c)
        if not c:
            return Poly.zero()
        if c == 1:
            return self
        return Poly._raw({w: _norm(d * c) for w, d in self._t.items()})

    def degree(self) -> int:
        """Maximal word length; -1 for the zero polynomial."""
        return max(map(len, self._t), default=-1)

    def leading_term(self, order: DegLexOrder) -> tuple[Word, Scalar]:
        if not self._t:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        w = max(self._t, key=order.key)
        return w, self._t[w]

    def monic(self, order: DegLexOrder) -> "Poly":
        _, lc = self.leading_term(order)
        if lc == 1:
            return self
        inv = Fraction(1, lc) if isinstance(lc, int) else 1 / lc
        return self.scale(inv)

    def sorted_terms(self, order: DegLexOrder) -> list[tuple[Word, Scalar]]:
        """Terms in strictly descending order: the canonical iteration."""
        return sorted(self._t.items(), key=lambda it: order.key(it[0]), reverse=True)

    def evaluate(self, letter_value: Callable[[str], Scalar]) -> Scalar:
        """Apply a multiplicative functional defined on letters."""
        total: Scalar = 0
        for w, c in self._t.items():
            val: Scalar = c
            for ch in w:
                x = letter_value(ch)
                if not x:
                    val = 0
                    break
                val = val * x
            if val:
                total = total + val
        return _norm(total)

    def __repr__(self) -> str:
        return f"Poly({self._t!r})"


def generator(alphabet: Alphabet, v: int, a: int) -> Poly:
    """The generator x[v,a] as a polynomial."""
    return Poly._raw({alphabet.letter(v, a): 1})


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def leading_term(p: Poly, order: DegLexOrder) -> tuple[Word, Scalar]:
    return p.leading_term(order)


def make_monic(p: Poly, order: DegLexOrder) -> Poly:
    return p.monic(order)


# --- text exchange format ---------------------------------------------------
#
# A polynomial prints as terms in descending order joined by " + " / " - ",
# each term "c*x[v,a]*x[w,b]*...".  The coefficient is a rational "p/q" with
# "1*" and "/1" omitted; the empty word prints as the bare coefficient.
# Examples: "x[0,1] + x[0,0] - 1", "5/3*x[0,2]", "7", "0".

_COEFF_RE = re.compile(r"-?\d+(?:/\d+)?\Z")
_FACTOR_RE = re.compile(r"x\[(\d+),(\d+)\]\Z")


def poly_to_text(p: Poly, alphabet: Alphabet, order: DegLexOrder | None = None) -> str:
    if not p:
        return "0"
    if order is None:
        order = DegLexOrder(alphabet)
    parts: list[str] = []
    for i, (w, c) in enumerate(p.sorted_terms(order)):
        neg = c < 0
        mag = -c if neg else c
        if w:
            body = "*".join(alphabet.label(ch) for ch in w)
            if mag != 1:
                body = f"{mag}*{body}"
        else:
            body = str(mag)
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def _parse_term(piece: str, sign: int, alphabet: Alphabet) -> tuple[Word, Scalar]:
    factors = piece.split("*")
    coeff: Scalar = sign
    chars: list[str] = []
    for k, f in enumerate(factors):
        m = _FACTOR_RE.fullmatch(f)
        if m:
            chars.append(alphabet.letter(int(m.group(1)), int(m.group(2))))
            continue
        if k != 0 or not _COEFF_RE.fullmatch(f):
            raise ValueError(f"malformed term {piece!r}")
        coeff = sign * Fraction(f)
    if not chars and len(factors) > 1:
        raise ValueError(f"malformed term {piece!r}")
    if not chars and not _COEFF_RE.fullmatch(factors[0]):
        raise ValueError(f"malformed term {piece!r}")
    return "".join(chars), _norm(coeff)


def parse_poly(text: str, alphabet: Alphabet) -> Poly:
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Poly.zero()
    lead_sign = 1
    if s.startswith("-"):
        lead_sign = -1
        s = s[1:]
        if not s or s[0] == " ":
            raise ValueError("dangling sign in polynomial text")
    terms: dict[Word, Scalar] = {}
    first = True
    for plus_chunk in s.split(" + "):
        for j, piece in enumerate(plus_chunk.split(" - ")):
            sign = -1 if j > 0 else (lead_sign if first else 1)
            first = False
            w, c = _parse_term(piece.strip(), sign, alphabet)
            acc = terms.get(w, 0) + c
            if acc:
                terms[w] = acc
            elif w in terms:
                del terms[w]
    return Poly(terms)
