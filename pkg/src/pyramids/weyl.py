"""Symbolic Heisenberg-Weyl engine.

Words are plain strings over ``{"p", "q"}``; the quotient relation is
``qp - pq = i``.  The normal order puts every ``q`` to the left of every
``p`` and is reached by rewriting ``pq -> qp - i`` to a fixpoint.

Balanced elements (equal numbers of p and q in each word) are polynomials
in ``z = (qp + pq)/2``, which this module computes two independent ways:

* :func:`reduce_balanced` normal-orders, rewrites each ``q^m p^m`` as a
  polynomial in ``w = qp`` derived by the engine itself, then substitutes
  ``w = z + i/2``;
* :func:`reduce_via_interpolation` lets the word act on ``x^m`` under
  ``p = x``, ``q = i d/dx`` and interpolates the eigenvalues at the nodes
  ``z = i(m + 1/2)``.

The module also hosts the representation of the Weyl algebra A1
(``RD - DR = 1``) on ``C[x, y]``.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import kernels
from .exact import (
    HALF,
    I,
    ONE,
    ZERO,
    GaussRat,
    ZPoly,
    _GAUSS_RE,
    as_gauss,
    format_combination,
    lagrange_interpolate,
)

__all__ = [
    "ParseError",
    "UnbalancedWordError",
    "WeylExpr",
    "NormalForm",
    "parse_expr",
    "normal_order",
    "reduce_balanced",
    "reduce_via_interpolation",
    "qp_power_poly",
    "adjoint",
    "is_hermitian",
    "is_palindrome",
    "is_balanced",
    "weight",
    "palindrome_hermitian_search",
    "BiPoly",
    "a1_apply",
    "a1_rep_check",
    "a1_operator_vanishes",
    "a1_normal_order",
    "A1_CONVENTIONS",
]


class ParseError(ValueError):
    """Syntax error in an operator expression; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnbalancedWordError(ValueError):
    def __init__(self, word: str):
        super().__init__(f"word {word!r} is not balanced")
        self.word = word


def is_balanced(word: str) -> bool:
    return word.count("p") == word.count("q")


def weight(word: str) -> int:
    """Number of p's in the word (the n of a balanced word of length 2n)."""
    return word.count("p")


def is_palindrome(word: str) -> bool:
    return word == word[::-1]


def _power_text(letter: str, n: int) -> str:
    return letter if n == 1 else f"{letter}^{n}"


def _word_text(word: str) -> str:
    if not word:
        return ""
    return " ".join(_power_text(k, len(list(g))) for k, g in itertools.groupby(word))


class WeylExpr:
    """Finite linear combination of words in the free algebra.

    ``terms`` maps each word to its nonzero GaussRat coefficient; the empty
    word is the identity.  Multiplication is concatenation extended
    bilinearly.  Equality is equality in the *free* algebra; compare
    :func:`normal_order` results for equality in the quotient.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[str, object] | None = None):
        clean: dict[str, GaussRat] = {}
        for w, c in (terms or {}).items():
            c = as_gauss(c)
            if c:
                clean[w] = c
        self.terms = clean

    @classmethod
    def word(cls, word: str, coeff=1) -> "WeylExpr":
        return cls({word: coeff})

    @classmethod
    def scalar(cls, c) -> "WeylExpr":
        return cls({"": c})

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    @staticmethod
    def _coerce(other):
        if isinstance(other, WeylExpr):
            return other
        try:
            return WeylExpr.scalar(as_gauss(other))
        except TypeError:
            return None

    def __add__(self, other):
        o = WeylExpr._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[str, GaussRat] = dict(self.terms)
        for w, c in o.terms.items():
            acc[w] = acc.get(w, ZERO) + c
        return WeylExpr(acc)

    __radd__ = __add__

    def __neg__(self):
        return WeylExpr({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        o = WeylExpr._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = WeylExpr._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = WeylExpr._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[str, GaussRat] = defaultdict(lambda: ZERO)
        for w1, c1 in self.terms.items():
            for w2, c2 in o.terms.items():
                acc[w1 + w2] = acc[w1 + w2] + c1 * c2
        return WeylExpr(acc)

    def __rmul__(self, other):
        o = WeylExpr._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def __pow__(self, n: int):
        result = WeylExpr.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, WeylExpr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_balanced(self) -> bool:
        return all(is_balanced(w) for w in self.terms)

    def max_weight(self) -> int:
        return max((weight(w) for w in self.terms), default=0)

    def __repr__(self):
        return f"WeylExpr({{{', '.join(f'{w!r}: {str(c)!r}' for w, c in self.terms.items())}}})"

    def __str__(self):
        items = sorted(self.terms.items(), key=lambda wc: (-len(wc[0]), wc[0]))
        return format_combination((c, _word_text(w)) for w, c in items)


class NormalForm:
    """Element of the quotient algebra as ``{(j, k): coeff}`` for ``q^j p^k``
    (or ``R^j D^k`` in A1, where ``letters`` is ``"RD"``)."""

    __slots__ = ("terms", "letters")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None, letters: str = "qp"):
        self.letters = letters
        clean: dict[tuple[int, int], GaussRat] = {}
        for key, c in (terms or {}).items():
            c = as_gauss(c)
            if c:
                clean[(int(key[0]), int(key[1]))] = c
        self.terms = clean

    def __getitem__(self, key: tuple[int, int]) -> GaussRat:
        return self.terms.get(key, ZERO)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "NormalForm") -> "NormalForm":
        acc = dict(self.terms)
        for key, c in other.terms.items():
            acc[key] = acc.get(key, ZERO) + c
        return NormalForm(acc, self.letters)

    def scale(self, c) -> "NormalForm":
        c = as_gauss(c)
        return NormalForm({key: v * c for key, v in self.terms.items()}, self.letters)

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.letters == other.letters and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[tuple[int, int], GaussRat]]:
        """Terms by descending total degree, then descending q-degree."""
        return sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def to_text(self) -> str:
        pairs = []
        hi, lo = self.letters
        for (j, k), c in self.sorted_terms():
            mono = " ".join(
                x for x in ((_power_text(hi, j) if j else ""), (_power_text(lo, k) if k else "")) if x
            )
            pairs.append((c, mono))
        return format_combination(pairs)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"NormalForm({{{', '.join(f'{k}: {str(v)!r}' for k, v in self.sorted_terms())}}})"


# -- parsing ----------------------------------------------------------------------

_NUMBER_CHARS = "0123456789"


class _Parser:
    """Recursive-descent parser for

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := scalar ['*'] factor* | factor+
    factor := LETTER ['^' uint]
    scalar := number ['i'] | 'i' | '(' gauss-literal ')'
    """

    def __init__(self, text: str, alphabet: str):
        self.text = text
        self.pos = 0
        self.alphabet = alphabet

    def error(self, message: str, pos: int | None = None):
        raise ParseError(message, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> WeylExpr:
        acc: dict[str, GaussRat] = defaultdict(lambda: ZERO)
        if not self.peek():
            self.error("empty expression")
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            coeff, word = self.term()
            acc[word] = acc[word] + (coeff if sign > 0 else -coeff)
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                self.error(f"unexpected {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1
        return WeylExpr(acc)

    def term(self) -> tuple[GaussRat, str]:
        start = self.pos
        coeff = ONE
        ch = self.peek()
        has_scalar = False
        if ch and (ch in _NUMBER_CHARS or ch == "i" or ch == "("):
            coeff = self.scalar()
            has_scalar = True
            if self.peek() == "*":
                self.pos += 1
                if not self.peek() or self.peek() not in self.alphabet:
                    self.error("expected a factor after '*'")
        letters: list[str] = []
        while True:
            ch = self.peek()
            if ch and ch in self.alphabet:
                letters.append(self.factor())
                if self.peek() == "*":
                    self.pos += 1
                    if not self.peek() or self.peek() not in self.alphabet:
                        self.error("expected a factor after '*'")
                continue
            break
        if not has_scalar and not letters:
            ch = self.peek()
            if not ch:
                self.error("unexpected end of input")
            if ch.isalpha():
                self.error(f"unknown symbol {ch!r}")
            self.error(f"unexpected {ch!r}", self.pos if self.pos > start else None)
        ch = self.peek()
        if ch and ch.isalpha():
            self.error(f"unknown symbol {ch!r}")
        return coeff, "".join(letters)

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _NUMBER_CHARS:
            self.pos += 1
        if start == self.pos:
            self.error("expected an unsigned integer")
        return int(self.text[start:self.pos])

    def scalar(self) -> GaussRat:
        ch = self.peek()
        if ch == "(":
            open_pos = self.pos
            close = self.text.find(")", self.pos)
            if close < 0:
                self.error("unbalanced parenthesis", open_pos)
            literal = self.text[self.pos + 1:close]
            if not _GAUSS_RE.match(literal):
                self.error("invalid scalar literal", open_pos + 1)
            self.pos = close + 1
            return as_gauss(literal)
        if ch == "i":
            self.pos += 1
            return I
        num = Fraction(self.uint())
        if self.peek() == "/":
            self.pos += 1
            den_pos = self.pos
            den = self.uint()
            if den == 0:
                self.error("zero denominator", den_pos)
            num = num / den
        if self.peek() == "i":
            self.pos += 1
            return GaussRat(0, num)
        return GaussRat(num)

    def factor(self) -> str:
        letter = self.text[self.pos]
        self.pos += 1
        if self.peek() == "^":
            self.pos += 1
            return letter * self.uint()
        return letter


def parse_expr(text: str, alphabet: str = "pq") -> WeylExpr:
    """Parse an operator expression such as ``"2i*p*q + p^2 q^2"``.

    >>> parse_expr("2i*p*q + p^2 q^2")
    WeylExpr({'pq': '2 i', 'ppqq': '1'})
    """
    return _Parser(text, alphabet).parse()


def _as_expr(e) -> WeylExpr:
    if isinstance(e, WeylExpr):
        return e
    if isinstance(e, str):
        return WeylExpr.word(e)
    raise TypeError(f"expected WeylExpr or word, got {type(e).__name__}")


# -- normal ordering ------------------------------------------------------------


@lru_cache(maxsize=65536)
def _rewrite_word(word: str, hi: str, lo: str, const: GaussRat, rightmost: bool) -> tuple:
    """Normal form of one word under ``lo hi -> hi lo + const`` applied at the
    leftmost (or rightmost) occurrence until no ``lo hi`` remains.

    Returns a tuple of ``(word, coeff)`` pairs whose words are ``hi^j lo^k``.
    """
    pattern = lo + hi
    idx = word.rfind(pattern) if rightmost else word.find(pattern)
    if idx < 0:
        return ((word, ONE),)
    swapped = word[:idx] + hi + lo + word[idx + 2:]
    contracted = word[:idx] + word[idx + 2:]
    acc: dict[str, GaussRat] = defaultdict(lambda: ZERO)
    for w, c in _rewrite_word(swapped, hi, lo, const, rightmost):
        acc[w] = acc[w] + c
    for w, c in _rewrite_word(contracted, hi, lo, const, rightmost):
        acc[w] = acc[w] + c * const
    return tuple((w, c) for w, c in acc.items() if c)


_MINUS_I = -I


def _nf_from_words(pairs: Iterable[tuple[str, GaussRat]], hi: str, lo: str) -> dict:
    out: dict[tuple[int, int], GaussRat] = defaultdict(lambda: ZERO)
    for w, c in pairs:
        j = w.count(hi)
        out[(j, len(w) - j)] = out[(j, len(w) - j)] + c
    return out


def normal_order(e, strategy: str = "kernel") -> NormalForm:
    """Normal form of ``e`` (a WeylExpr or a single word) under qp - pq = i.

    ``strategy`` selects how the rewrite ``pq -> qp - i`` is scheduled:
    ``"leftmost"`` or ``"rightmost"`` rewrite literally at the first/last
    occurrence; ``"kernel"`` (default) absorbs letters one at a time from
    the left via ``p^k q = q p^k - i k p^(k-1)``, which is the same rewrite
    applied in a fixed order.  All strategies give identical results.
    """
    e = _as_expr(e)
    acc: dict[tuple[int, int], GaussRat] = defaultdict(lambda: ZERO)
    if strategy == "kernel":
        for w, c in e.terms.items():
            for key, (re, im) in kernels.normal_order_word(w).items():
                acc[key] = acc[key] + c * GaussRat._raw(Fraction(re), Fraction(im))
    elif strategy in ("leftmost", "rightmost"):
        rightmost = strategy == "rightmost"
        for w, c in e.terms.items():
            for key, v in _nf_from_words(_rewrite_word(w, "q", "p", _MINUS_I, rightmost), "q", "p").items():
                acc[key] = acc[key] + c * v
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return NormalForm(acc)


# -- reduction of balanced elements --------------------------------------------------


@lru_cache(maxsize=None)
def qp_power_poly(m: int) -> ZPoly:
    """``q^m p^m`` as a polynomial in ``w = qp``, bootstrapped from m - 1.

    The engine normal-orders ``(qp)^m = sum_{j<=m} c_j q^j p^j`` (with
    ``c_m = 1``) and solves for ``q^m p^m = w^m - sum_{j<m} c_j q^j p^j``.
    """
    if m == 0:
        return ZPoly((1,))
    nf = normal_order("qp" * m)
    poly = ZPoly.monomial(m)
    for (j, k), c in nf.terms.items():
        if j != k:
            raise AssertionError("normal form of (qp)^m must be diagonal")
        if j == m:
            if c != ONE:
                raise AssertionError("leading coefficient of (qp)^m must be 1")
            continue
        poly = poly - qp_power_poly(j) * c
    return poly


def _check_balanced(e: WeylExpr):
    for w in e.terms:
        if not is_balanced(w):
            raise UnbalancedWordError(w)


_W_OF_Z = ZPoly((HALF * I, 1))  # w = qp = z + i/2


def reduce_balanced(e, strategy: str = "kernel") -> ZPoly:
    """Polynomial in ``z = (qp + pq)/2`` representing a balanced element.

    >>> str(reduce_balanced(parse_expr("q p^2 q")))
    'z^2 + 1/4'
    """
    e = _as_expr(e)
    _check_balanced(e)
    nf = normal_order(e, strategy)
    in_w = ZPoly()
    for (j, k), c in nf.terms.items():
        if j != k:
            raise AssertionError("balanced input produced an unbalanced monomial")
        in_w = in_w + qp_power_poly(j) * c
    return in_w.evaluate(_W_OF_Z)


def _eigenvalue(e: WeylExpr, m: int) -> GaussRat:
    acc = ZERO
    for w, c in e.terms.items():
        re, im = kernels.word_eigenvalue(w, m)
        if re or im:
            acc = acc + c * GaussRat._raw(Fraction(re), Fraction(im))
    return acc


def reduce_via_interpolation(e) -> ZPoly:
    """Same polynomial as :func:`reduce_balanced`, obtained from the action
    ``p = x``, ``q = i d/dx`` on ``x^0 .. x^n`` and interpolation at the
    eigenvalues ``i(m + 1/2)`` of ``z``."""
    e = _as_expr(e)
    _check_balanced(e)
    n = e.max_weight()
    nodes = [I * (m + HALF) for m in range(n + 1)]
    values = [_eigenvalue(e, m) for m in range(n + 1)]
    return lagrange_interpolate(nodes, values)


# -- adjoints and the palindrome question -----------------------------------------------


def adjoint(e) -> WeylExpr:
    """Reverse every word and conjugate every coefficient."""
    e = _as_expr(e)
    return WeylExpr({w[::-1]: c.conj() for w, c in e.terms.items()})


def is_hermitian(e) -> bool:
    """True when ``e`` equals its adjoint in the quotient algebra."""
    e = _as_expr(e)
    return normal_order(e) == normal_order(adjoint(e))


def palindrome_hermitian_search(max_length: int, min_length: int = 1) -> dict:
    """Exhaustively compare "palindrome" with "Hermitian" for all words.

    Returns counts per length and every counterexample found (a Hermitian
    word that is not a palindrome, or the reverse).  No theorem is claimed.
    """
    counterexamples: list[str] = []
    per_length = {}
    for length in range(min_length, max_length + 1):
        herm = 0
        pal = 0
        seen: set[str] = set()
        for letters in itertools.product("pq", repeat=length):
            w = "".join(letters)
            if w in seen:
                continue
            r = w[::-1]
            seen.add(w)
            seen.add(r)
            palindromic = w == r
            hermitian = palindromic or kernels.normal_order_word(w) == kernels.normal_order_word(r)
            mult = 1 if palindromic else 2
            herm += mult * hermitian
            pal += mult * palindromic
            if hermitian != palindromic:
                counterexamples.extend([w] if palindromic else [w, r])
        per_length[length] = {"words": 2**length, "hermitian": herm, "palindromes": pal}
    return {"max_length": max_length, "per_length": per_length, "counterexamples": counterexamples}


# -- the Weyl algebra A1 acting on C[x, y] ---------------------------------------------------

BiPoly = dict  # {(j, k): coeff} for x^j y^k


A1_CONVENTIONS = ("corrected", "printed")


def _apply_letter(letter: str, poly: BiPoly, sign: int) -> BiPoly:
    out: dict[tuple[int, int], object] = defaultdict(int)
    if letter == "R":
        for (j, k), c in poly.items():
            out[(j + 1, k)] += c
    elif letter == "D":
        for (j, k), c in poly.items():
            if j:
                out[(j - 1, k)] += sign * j * c
            out[(j, k + 1)] += c
    else:
        raise ValueError(f"letter {letter!r} is not in {{R, D}}")
    return {key: c for key, c in out.items() if c}


def a1_apply(e, poly: BiPoly, convention: str = "corrected") -> BiPoly:
    """Apply an element of A1 (letters R, D) to a bivariate polynomial.

    ``R(x^j y^k) = x^(j+1) y^k`` and ``D(x^j y^k) = s j x^(j-1) y^k + x^j y^(k+1)``;
    words act right to left.  With ``s = +1`` ("printed") the operators
    satisfy DR - RD = 1, the opposite of the defining relation; ``s = -1``
    ("corrected", the default) gives RD - DR = 1.  Both send ``R^j D^k``
    to ``x^j y^k`` on the constant 1.
    """
    if convention not in A1_CONVENTIONS:
        raise ValueError(f"convention must be one of {A1_CONVENTIONS}")
    sign = -1 if convention == "corrected" else 1
    if isinstance(e, str):
        e = parse_expr(e, alphabet="RD")
    out: dict[tuple[int, int], object] = defaultdict(int)
    for w, c in e.terms.items():
        cur = dict(poly)
        for letter in reversed(w):
            cur = _apply_letter(letter, cur, sign)
        for key, v in cur.items():
            out[key] += c * v
    return {key: as_gauss(v) for key, v in out.items() if v}


def a1_rep_check(e, convention: str = "corrected") -> BiPoly:
    """Image of the constant polynomial 1 under ``e``."""
    return a1_apply(e, {(0, 0): 1}, convention)


def a1_operator_vanishes(
    e, max_degree: int, convention: str = "corrected"
) -> tuple[bool, tuple[int, int] | None]:
    """Check that ``e`` annihilates every ``x^j y^k`` with ``j + k <= max_degree``.

    Returns ``(True, None)`` or ``(False, (j, k))`` for the first witness.
    """
    if isinstance(e, str):
        e = parse_expr(e, alphabet="RD")
    for total in range(max_degree + 1):
        for j in range(total + 1):
            if a1_apply(e, {(j, total - j): 1}, convention):
                return False, (j, total - j)
    return True, None


def a1_normal_order(e, strategy: str = "leftmost") -> NormalForm:
    """Normal form ``sum alpha_{j,k} R^j D^k`` under ``DR -> RD - 1``."""
    if isinstance(e, str):
        e = parse_expr(e, alphabet="RD")
    acc: dict[tuple[int, int], GaussRat] = defaultdict(lambda: ZERO)
    rightmost = strategy == "rightmost"
    for w, c in e.terms.items():
        for key, v in _nf_from_words(_rewrite_word(w, "R", "D", -ONE, rightmost), "R", "D").items():
            acc[key] = acc[key] + c * v
    return NormalForm(acc, "RD")
