"""Exact arithmetic over Q(i): Gaussian rationals, dense polynomials,
truncated power series and Lagrange interpolation.

Rationals are :class:`fractions.Fraction`, which already keeps
``gcd(num, den) == 1`` and ``den > 0`` at all times.  A :class:`GaussRat`
is a pair of such fractions; every value is kept canonical after each
operation so that equality is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

__all__ = [
    "GaussRat",
    "ZPoly",
    "TruncSeries",
    "SeriesError",
    "I",
    "ONE",
    "ZERO",
    "HALF",
    "as_gauss",
    "parse_gauss",
    "format_gauss",
    "format_combination",
    "lagrange_interpolate",
]

Scalar = Union[int, Fraction, "GaussRat"]


class GaussRat:
    """An element ``re + im*i`` of Q(i).

    Instances are immutable; all arithmetic returns new objects.

    >>> GaussRat(Fraction(1, 2), Fraction(1, 2)) * GaussRat(Fraction(1, 2), Fraction(-1, 2))
    GaussRat('1/2')
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussRat":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    def __reduce__(self):
        return (GaussRat, (self.re, self.im))

    # -- coercion -----------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussRat):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussRat._raw(Fraction(other), Fraction(0))
        if isinstance(other, Rational):
            return GaussRat._raw(Fraction(other.numerator, other.denominator), Fraction(0))
        return None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = GaussRat._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussRat._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = GaussRat._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat._raw(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRat._raw(self.re * other, self.im * other)
        o = GaussRat._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b:
            return GaussRat._raw(a * c, a * d)
        if not d:
            return GaussRat._raw(a * c, b * c)
        return GaussRat._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRat":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("GaussRat division by zero")
        return GaussRat._raw(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("GaussRat division by zero")
            return GaussRat._raw(self.re / other, self.im / other)
        o = GaussRat._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = GaussRat._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussRat._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GaussRat":
        return GaussRat._raw(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus ``re^2 + im^2``."""
        return self.re * self.re + self.im * self.im

    # -- predicates / comparisons --------------------------------------------
    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = GaussRat._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRat({format_gauss(self)!r})"

    def __str__(self):
        return format_gauss(self)


ZERO = GaussRat(0)
ONE = GaussRat(1)
I = GaussRat(0, 1)
HALF = GaussRat(Fraction(1, 2))


def as_gauss(x) -> GaussRat:
    """Coerce an int, Fraction, GaussRat or textual literal to GaussRat."""
    if isinstance(x, str):
        return parse_gauss(x)
    g = GaussRat._coerce(x)
    if g is None:
        raise TypeError(f"cannot convert {type(x).__name__} to GaussRat")
    return g


# -- textual form ---------------------------------------------------------------

_NUM = r"\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"""^\s*(?:
        (?P<re>[+-]?{_NUM})(?:\s*(?P<imsign>[+-])\s*(?P<imnum>{_NUM})?\s*i)?
      | (?P<sign>[+-])?\s*(?P<num>{_NUM})?\s*i
    )\s*$""",
    re.VERBOSE,
)


def _parse_fraction(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_gauss(text: str) -> GaussRat:
    """Parse ``a/b``, ``c/d i`` or ``a/b+c/d i`` (integers allowed for any part).

    >>> parse_gauss("1/4-3/4 i")
    GaussRat('1/4-3/4 i')
    """
    m = _GAUSS_RE.match(text)
    if m is None:
        raise ValueError(f"not a Gaussian rational literal: {text!r}")
    if m.group("re") is not None:
        re_part = _parse_fraction(m.group("re"))
        if m.group("imsign") is None:
            return GaussRat._raw(re_part, Fraction(0))
        im_part = _parse_fraction(m.group("imnum") or "1")
        if m.group("imsign") == "-":
            im_part = -im_part
        return GaussRat._raw(re_part, im_part)
    im_part = _parse_fraction(m.group("num") or "1")
    if m.group("sign") == "-":
        im_part = -im_part
    return GaussRat._raw(Fraction(0), im_part)


def format_gauss(x) -> str:
    """Canonical text of a Gaussian rational; inverse of :func:`parse_gauss`."""
    g = as_gauss(x)
    if not g.im:
        return str(g.re)
    if not g.re:
        return f"{g.im} i"
    sign = "+" if g.im > 0 else "-"
    return f"{g.re}{sign}{abs(g.im)} i"


# -- polynomials ---------------------------------------------------------------


class ZPoly:
    """Dense polynomial over Q(i), coefficients in ascending degree.

    The zero polynomial has an empty coefficient tuple and degree -1.
    Scalars (int, Fraction, GaussRat) mix freely in arithmetic.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_gauss(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[GaussRat, ...] = tuple(cs)

    @classmethod
    def _from_trimmed(cls, cs: list) -> "ZPoly":
        while cs and not cs[-1]:
            cs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def constant(cls, c) -> "ZPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "ZPoly":
        return cls([0] * degree + [c])

    @classmethod
    def z(cls) -> "ZPoly":
        return cls((0, 1))

    @classmethod
    def linear(cls, a, b) -> "ZPoly":
        """The polynomial ``a*z + b``."""
        return cls((b, a))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, r: int) -> GaussRat:
        if 0 <= r < len(self.coeffs):
            return self.coeffs[r]
        return ZERO

    def leading(self) -> GaussRat:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def is_real(self) -> bool:
        return all(not c.im for c in self.coeffs)

    def parity(self) -> int | None:
        """0 if even, 1 if odd, None if mixed (zero polynomial counts as even)."""
        degs = {r % 2 for r, c in enumerate(self.coeffs) if c}
        if not degs:
            return 0
        return degs.pop() if len(degs) == 1 else None

    def conj(self) -> "ZPoly":
        return ZPoly._from_trimmed([c.conj() for c in self.coeffs])

    def monic(self) -> "ZPoly":
        lead = self.leading()
        if not lead:
            raise ZeroDivisionError("zero polynomial has no monic normalization")
        return self * lead.inverse()

    # -- arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, ZPoly):
            return other
        g = GaussRat._coerce(other)
        if g is None:
            return None
        return ZPoly._from_trimmed([g])

    def __add__(self, other):
        o = ZPoly._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for r, c in enumerate(b):
            out[r] = out[r] + c
        return ZPoly._from_trimmed(out)

    __radd__ = __add__

    def __neg__(self):
        return ZPoly._from_trimmed([-c for c in self.coeffs])

    def __sub__(self, other):
        o = ZPoly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = ZPoly._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if not isinstance(other, ZPoly):
            g = GaussRat._coerce(other)
            if g is None:
                return NotImplemented
            return ZPoly._from_trimmed([c * g for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZPoly._from_trimmed([])
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return ZPoly._from_trimmed(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        g = GaussRat._coerce(other)
        if g is None:
            return NotImplemented
        inv = g.inverse()
        return ZPoly._from_trimmed([c * inv for c in self.coeffs])

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = ZPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "ZPoly") -> tuple["ZPoly", "ZPoly"]:
        """Euclidean division: ``self = q*other + r`` with ``deg r < deg other``."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        inv_lead = other.leading().inverse()
        quot = [ZERO] * max(len(rem) - dd, 0)
        for shift in range(len(rem) - dd - 1, -1, -1):
            c = rem[shift + dd] * inv_lead
            quot[shift] = c
            if c:
                for r, oc in enumerate(other.coeffs):
                    rem[shift + r] = rem[shift + r] - c * oc
        return ZPoly._from_trimmed(quot), ZPoly._from_trimmed(rem[:dd])

    def exact_div(self, other: "ZPoly") -> "ZPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    # -- evaluation / substitution --------------------------------------------
    def __call__(self, w):
        return self.evaluate(w)

    def evaluate(self, w):
        """Horner evaluation; ``w`` may be a scalar or another ZPoly."""
        if isinstance(w, ZPoly):
            acc = ZPoly()
            for c in reversed(self.coeffs):
                acc = acc * w + c
            return acc
        w = as_gauss(w)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * w + c
        return acc

    def compose_linear(self, a, b) -> "ZPoly":
        """Return ``self(a*z + b)``."""
        return self.evaluate(ZPoly.linear(a, b))

    # -- comparison / display --------------------------------------------------
    def __eq__(self, other):
        o = ZPoly._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ZPoly([{', '.join(repr(str(c)) for c in self.coeffs)}])"

    def __str__(self):
        return self.to_text()

    def to_text(self, var: str = "z") -> str:
        """Human-readable form, e.g. ``z^2 + 1/4`` or ``z^2 + (2 i) z - 3/4``."""
        pairs = []
        for r in range(len(self.coeffs) - 1, -1, -1):
            mono = "" if r == 0 else (var if r == 1 else f"{var}^{r}")
            pairs.append((self.coeffs[r], mono))
        return format_combination(pairs)


def format_combination(pairs: Iterable[tuple[GaussRat, str]]) -> str:
    """Join ``(coefficient, monomial)`` pairs as ``c1 m1 + c2 m2 ...``.

    Real coefficients merge their sign into the joiner and unit magnitudes
    are dropped; non-real coefficients are parenthesized.  An empty
    monomial string denotes the constant term.
    """
    parts: list[str] = []
    for c, mono in pairs:
        c = as_gauss(c)
        if not c:
            continue
        if c.is_real():
            sign = "-" if c.re < 0 else "+"
            mag = abs(c.re)
            body = str(mag) if (mag != 1 or not mono) else ""
        else:
            sign = "+"
            body = f"({format_gauss(c)})"
        term = " ".join(x for x in (body, mono) if x)
        if not parts:
            parts.append(term if sign == "+" else f"-{term}")
        else:
            parts.append(f"{sign} {term}")
    return " ".join(parts) if parts else "0"


# -- truncated power series -----------------------------------------------------


class SeriesError(ValueError):
    """Precondition violation in a truncated-series operation."""


class TruncSeries:
    """Power series ``sum c_k t^k`` truncated at a fixed order ``N``.

    Coefficients may be ints, Fractions, GaussRats or ZPolys; arithmetic is
    delegated to them.  Operations never extend the order, and combining
    series of different orders raises :class:`SeriesError`.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise SeriesError("order must be non-negative")
        cs = list(coeffs)[: order + 1]
        cs.extend([0] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def variable(cls, order: int) -> "TruncSeries":
        return cls([0, 1], order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries":
        return cls([c], order)

    @classmethod
    def from_terms(cls, term, order: int) -> "TruncSeries":
        """Series whose k-th coefficient is ``term(k)``."""
        return cls([term(k) for k in range(order + 1)], order)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def _check(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            if other.order != self.order:
                raise SeriesError(f"order mismatch: {self.order} vs {other.order}")
            return other
        return TruncSeries([other], self.order)

    def __add__(self, other):
        o = self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, o.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([a * other for a in self.coeffs], self.order)
        o = self._check(other)
        n = self.order
        out = []
        for k in range(n + 1):
            acc = 0
            for j in range(k + 1):
                a = self.coeffs[j]
                b = o.coeffs[k - j]
                if _nonzero(a) and _nonzero(b):
                    acc = acc + a * b
            out.append(acc)
        return TruncSeries(out, n)

    def __rmul__(self, other):
        return TruncSeries([other * a for a in self.coeffs], self.order)

    def exp(self) -> "TruncSeries":
        if _nonzero(self.coeffs[0]):
            raise SeriesError("exp requires zero constant term")
        # E' = s' E  =>  n e_n = sum_{k=1}^n k s_k e_{n-k}
        e = [1]
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                if _nonzero(self.coeffs[k]):
                    acc = acc + self.coeffs[k] * k * e[n - k]
            e.append(acc * Fraction(1, n))
        return TruncSeries(e, self.order)

    def power(self, alpha) -> "TruncSeries":
        """``self ** alpha`` for rational alpha; requires constant term 1."""
        if self.coeffs[0] != 1:
            raise SeriesError("power/reciprocal require constant term 1")
        alpha = Fraction(alpha)
        y = [1]
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                if _nonzero(self.coeffs[k]):
                    acc = acc + self.coeffs[k] * ((alpha + 1) * k - n) * y[n - k]
            y.append(acc * Fraction(1, n))
        return TruncSeries(y, self.order)

    def reciprocal(self) -> "TruncSeries":
        if self.coeffs[0] != 1:
            raise SeriesError("reciprocal requires constant term 1")
        r = [1]
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                if _nonzero(self.coeffs[k]):
                    acc = acc - self.coeffs[k] * r[n - k]
            r.append(acc)
        return TruncSeries(r, self.order)

    def sqrt_reciprocal(self) -> "TruncSeries":
        return self.power(Fraction(-1, 2))

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """``self(inner(t))``; inner must have zero constant term."""
        inner = self._check(inner)
        if _nonzero(inner.coeffs[0]):
            raise SeriesError("compose requires inner series with zero constant term")
        acc = TruncSeries([], self.order)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    # -- standard series ---------------------------------------------------------
    @classmethod
    def exp_series(cls, order: int) -> "TruncSeries":
        return cls.variable(order).exp()

    @classmethod
    def arctan_series(cls, order: int) -> "TruncSeries":
        # term recurrence: c_{2k+1} = (-1)^k / (2k+1)
        return cls.from_terms(
            lambda k: Fraction((-1) ** (k // 2), k) if k % 2 else 0, order
        )

    @classmethod
    def cosh_series(cls, order: int) -> "TruncSeries":
        cs = []
        fact = 1
        for k in range(order + 1):
            if k:
                fact *= k
            cs.append(Fraction(1, fact) if k % 2 == 0 else 0)
        return cls(cs, order)


def _nonzero(c) -> bool:
    if isinstance(c, ZPoly):
        return not c.is_zero()
    return bool(c)


# -- interpolation ---------------------------------------------------------------


def lagrange_interpolate(nodes: Sequence, values: Sequence) -> ZPoly:
    """Unique polynomial of degree < len(nodes) through ``(nodes[i], values[i])``."""
    xs = [as_gauss(x) for x in nodes]
    ys = [as_gauss(y) for y in values]
    if len(xs) != len(ys):
        raise ValueError("nodes and values must have equal length")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be pairwise distinct")
    result = ZPoly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        basis = ZPoly((1,))
        denom = ONE
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * ZPoly.linear(1, -xj)
                denom = denom * (xi - xj)
        result = result + basis * (yi / denom)
    return result
