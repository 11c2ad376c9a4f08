"""Exact coefficients: the field Q(v) of rational functions in one variable.

A :class:`Scalar` is a reduced fraction ``num/den`` of integer polynomials
(python-flint ``fmpz_poly``).  The canonical form makes structural equality
coincide with field equality.  The classical engine uses ``fractions.Fraction``
directly; both coefficient types share the small protocol used by the
algebra code (``+ - * /``, ``bool``, ``==``).
"""
from __future__ import annotations

import re
from fractions import Fraction

from flint import fmpz_poly

BigRat = Fraction

_ONE = fmpz_poly([1])
_ZERO = fmpz_poly([])


def _content(p: fmpz_poly) -> int:
    return int(p.content())


class Scalar:
    """An element of Q(v) kept in lowest terms with positive leading denominator."""

    __slots__ = ("num", "den", "_h")

    def __init__(self, num=0, den=None, *, _canonical: bool = False):
        if not isinstance(num, fmpz_poly):
            num = fmpz_poly([int(num)]) if num else fmpz_poly([])
        if den is None:
            den = _ONE
        elif not isinstance(den, fmpz_poly):
            den = fmpz_poly([int(den)])
        if not _canonical:
            num, den = _canon(num, den)
        self.num = num
        self.den = den
        self._h = None

    # construction helpers
    @staticmethod
    def v(k: int = 1) -> "Scalar":
        if k >= 0:
            return Scalar(fmpz_poly([0] * k + [1]), _ONE, _canonical=True)
        return Scalar(_ONE, fmpz_poly([0] * (-k) + [1]), _canonical=True)

    @staticmethod
    def laurent(coeffs: dict[int, int]) -> "Scalar":
        """Build sum c_k v^k from a map exponent -> integer."""
        coeffs = {k: c for k, c in coeffs.items() if c}
        if not coeffs:
            return ZERO
        lo = min(min(coeffs), 0)
        num = [0] * (max(coeffs) - lo + 1)
        for k, c in coeffs.items():
            num[k - lo] = c
        return Scalar(fmpz_poly(num), fmpz_poly([0] * (-lo) + [1]))

    @staticmethod
    def coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, Fraction):
            return Scalar(x.numerator, x.denominator)
        if isinstance(x, int):
            return Scalar(x)
        raise TypeError(f"cannot coerce {x!r} to Scalar")

    # arithmetic
    def __add__(self, o):
        if not isinstance(o, Scalar):
            if o == 0:
                return self
            o = Scalar.coerce(o)
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return Scalar(self.num + o.num, self.den)
        return Scalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.num, self.den, _canonical=True)

    def __sub__(self, o):
        if not isinstance(o, Scalar):
            o = Scalar.coerce(o)
        return self + (-o)

    def __rsub__(self, o):
        return Scalar.coerce(o) - self

    def __mul__(self, o):
        if not isinstance(o, Scalar):
            o = Scalar.coerce(o)
        if not self.num or not o.num:
            return ZERO
        if self.den == _ONE and o.den == _ONE:
            return Scalar(self.num * o.num, _ONE, _canonical=True)
        return Scalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if not isinstance(o, Scalar):
            o = Scalar.coerce(o)
        if not o.num:
            raise ZeroDivisionError("zero denominator")
        return Scalar(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, o):
        return Scalar.coerce(o) / self

    def __pow__(self, k: int):
        if k < 0:
            return ONE / (self ** (-k))
        return Scalar(self.num ** k, self.den ** k, _canonical=True)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, o):
        if not isinstance(o, Scalar):
            try:
                o = Scalar.coerce(o)
            except TypeError:
                return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._h is None:
            self._h = hash((tuple(int(c) for c in self.num.coeffs()),
                            tuple(int(c) for c in self.den.coeffs())))
        return self._h

    def bar(self) -> "Scalar":
        """Image under the field automorphism v -> 1/v."""
        dn, dd = self.num.degree(), self.den.degree()
        n = fmpz_poly(list(reversed(self.num.coeffs()))) if dn >= 0 else _ZERO
        d = fmpz_poly(list(reversed(self.den.coeffs())))
        # num(1/v)/den(1/v) = v^dd * rev(num) / (v^dn * rev(den))
        if dn > dd:
            d = d * fmpz_poly([0] * (dn - dd) + [1])
        elif dd > dn and dn >= 0:
            n = n * fmpz_poly([0] * (dd - dn) + [1])
        return Scalar(n, d)

    def is_laurent(self) -> bool:
        """True when the denominator is a power of v."""
        c = self.den.coeffs()
        return c[-1] == 1 and all(x == 0 for x in c[:-1])

    def laurent_terms(self) -> dict[int, int]:
        """Exponent -> coefficient, only valid when ``is_laurent()``."""
        shift = self.den.degree()
        return {k - shift: int(c) for k, c in enumerate(self.num.coeffs()) if c}

    def is_unit_monomial(self):
        """Return (sign, k) if self = sign * v^k, else None."""
        if not self.is_laurent():
            return None
        t = self.laurent_terms()
        if len(t) != 1:
            return None
        (k, c), = t.items()
        return (c, k) if c in (1, -1) else None

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self.is_laurent():
            return _laurent_str(self.laurent_terms())
        return f"({_poly_str(self.num)})/({_poly_str(self.den)})"


def _canon(num: fmpz_poly, den: fmpz_poly):
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return _ZERO, _ONE
    if den != _ONE:
        g = num.gcd(den)
        if g != _ONE:
            num = num // g
            den = den // g
        c = _content(den)
        if c != 1:
            from math import gcd
            c = gcd(c, _content(num))
            if c != 1:
                num = fmpz_poly([x // c for x in num.coeffs()])
                den = fmpz_poly([x // c for x in den.coeffs()])
        if den.coeffs()[-1] < 0:
            num, den = -num, -den
    return num, den


def _mono(k: int) -> str:
    if k == 0:
        return "1"
    if k == 1:
        return "v"
    return f"v^{k}"


def _laurent_str(terms: dict[int, int]) -> str:
    if not terms:
        return "0"
    out = []
    for k in sorted(terms, reverse=True):
        c = terms[k]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        elif a == 1:
            body = _mono(k)
        else:
            body = f"{a}*{_mono(k)}"
        out.append((sign, body))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def _poly_str(p: fmpz_poly) -> str:
    return _laurent_str({k: int(c) for k, c in enumerate(p.coeffs()) if c})


ZERO = Scalar()
ONE = Scalar(1)
V = Scalar.v(1)
VINV = Scalar.v(-1)


def qint(k: int) -> Scalar:
    """(v^k - v^-k)/(v - v^-1)."""
    return (Scalar.v(k) - Scalar.v(-k)) / (V - VINV)


# ---------------------------------------------------------------- parsing

_TOK = re.compile(r"\s*(?:(\d+)|(v)|(\^)|([-+*/()]))")


def parse_scalar(text: str) -> Scalar:
    """Parse integers, ``v``, ``v^k`` (k may be negative) with ``+ - * /`` and parentheses."""
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOK.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad scalar syntax at {pos}: {text!r}")
        toks.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    p = _ScalarParser(toks)
    val = p.expr()
    if p.i != len(toks):
        raise ValueError(f"trailing input in scalar {text!r}")
    return val


class _ScalarParser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, t=None):
        tok = self.peek()
        if t is not None and tok != t:
            raise ValueError(f"expected {t!r}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        val = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            val = val + t if op == "+" else val - t
        return val

    def term(self):
        val = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            f = self.factor()
            val = val * f if op == "*" else val / f
        return val

    def factor(self):
        tok = self.peek()
        if tok == "-":
            self.take()
            return -self.factor()
        if tok == "(":
            self.take()
            val = self.expr()
            self.take(")")
        elif tok == "v":
            self.take()
            val = V
        elif tok is not None and tok.isdigit():
            val = Scalar(int(self.take()))
        else:
            raise ValueError(f"unexpected token {tok!r}")
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            e = int(self.take())
            val = val ** (-e if neg else e)
        return val
