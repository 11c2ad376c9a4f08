"""Expression grammar for elements of either engine.

    atom := NAME[i] | scalar | ( expr ) | [ expr , expr ] | T[i](expr)
          | Tinv[i](expr) | Omega(expr)
    expr := sum of products with + - * and / by scalars; no juxtaposition

NAME is one of E F Eb Fb K Kinv Kb (quantum) or e f eb fb h hb (classical).
``to_text`` in :mod:`queerpbw.superalg` prints in this grammar.
"""
from __future__ import annotations

import re
from fractions import Fraction

from . import superalg as sa
from .scalars import V, Scalar
from .superalg import Element

ENGINES = ("quantum", "classical")

_QUANTUM = {"E": sa.E, "F": sa.F, "Eb": sa.EB, "Fb": sa.FB, "K": sa.K, "Kinv": sa.KINV, "Kb": sa.KB}
_CLASSICAL = {"e": sa.CE, "f": sa.CF, "eb": sa.CEB, "fb": sa.CFB, "h": sa.CH, "hb": sa.CHB}
_CARTAN = {sa.K, sa.KINV, sa.KB, sa.CH, sa.CHB}

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z]+)|(?P<op>[-+*/^()\[\],]))")


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


def _tokenize(text: str):
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def _is_scalar(x: Element) -> bool:
    return all(w == () for w in x.terms)


def _scalar_value(x: Element, zero):
    return x.terms.get((), zero)


class _Parser:
    def __init__(self, text: str, n: int, engine: str):
        if engine not in ENGINES:
            raise ValueError(f"unknown engine {engine!r}")
        self.toks = _tokenize(text)
        self.i = 0
        self.n = n
        self.engine = engine
        self.names = _QUANTUM if engine == "quantum" else _CLASSICAL
        self.unit = Scalar(1) if engine == "quantum" else Fraction(1)

    # token helpers
    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self, value=None):
        tok = self.peek()
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r}, got {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def const(self, c) -> Element:
        return Element.scalar(self.unit * c)

    # grammar
    def parse(self) -> Element:
        x = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return x

    def expr(self) -> Element:
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        x = self.term()
        if sign < 0:
            x = -x
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            y = self.term()
            x = x + y if op == "+" else x - y
        return x

    def term(self) -> Element:
        x = self.power()
        while self.peek()[1] in ("*", "/"):
            op, _, pos = self.take()[1], None, self.peek()[2]
            y = self.power()
            if op == "*":
                x = x * y
                continue
            if not _is_scalar(y) or not y:
                raise ParseError("division needs a nonzero scalar divisor", pos)
            x = x.scale(self.unit / _scalar_value(y, 0))
        return x

    def power(self) -> Element:
        x = self.atom()
        if self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            kind, val, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be an integer", pos)
            k = int(val)
            if neg:
                if not _is_scalar(x) or not x:
                    raise ParseError("negative exponent needs a nonzero scalar", pos)
                x = Element.scalar((self.unit / _scalar_value(x, 0)) ** k)
            else:
                x = x ** k
        return x

    def atom(self) -> Element:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            return self.const(int(val))
        if val == "-":
            self.take()
            return -self.power()
        if val == "(":
            self.take()
            x = self.expr()
            self.take(")")
            return x
        if val == "[":
            self.take()
            x = self.expr()
            self.take(",")
            y = self.expr()
            self.take("]")
            try:
                return sa.superbracket(x, y)
            except ValueError as exc:
                raise ParseError(str(exc), pos) from None
        if kind == "name":
            return self.named(val, pos)
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)

    def index(self) -> tuple[int, int]:
        self.take("[")
        kind, val, pos = self.take()
        if kind != "num":
            raise ParseError("index must be a positive integer", pos)
        self.take("]")
        return int(val), pos

    def named(self, name: str, pos: int) -> Element:
        self.take()
        if name == "v":
            if self.engine != "quantum":
                raise ParseError("v is only available in the quantum engine", pos)
            return Element.scalar(V)
        if name in ("T", "Tinv"):
            i, ipos = self.index()
            if not 1 <= i <= self.n - 1:
                raise ParseError(f"braid index {i} out of range for n={self.n}", ipos)
            arg = self.call_arg()
            return sa.apply_genmap(self.braid(i, name == "Tinv"), arg)
        if name in ("Omega", "omega"):
            arg = self.call_arg()
            return sa.apply_genmap(self.omega(), arg)
        kind = self.names.get(name)
        if kind is None:
            raise ParseError(f"unknown symbol {name!r} for the {self.engine} engine", pos)
        i, ipos = self.index()
        top = self.n if kind in _CARTAN else self.n - 1
        if not 1 <= i <= top:
            raise ParseError(f"index {i} out of range for {name} with n={self.n}", ipos)
        return Element.gen(kind, i, self.unit)

    def call_arg(self) -> Element:
        self.take("(")
        x = self.expr()
        self.take(")")
        return x

    def braid(self, i: int, inverse: bool):
        if self.engine == "quantum":
            from .quantum import quantum_braid
            return quantum_braid(self.n, i, inverse)
        from .classical import classical_braid
        return classical_braid(self.n, i, inverse)

    def omega(self):
        if self.engine == "quantum":
            from .quantum import omega_quantum
            return omega_quantum(self.n)
        from .classical import omega_classical
        return omega_classical(self.n)


def parse_expression(text: str, n: int, engine: str = "quantum") -> Element:
    """Parse ``text`` into an element over the alphabet of ``engine`` with rank n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return _Parser(text, n, engine).parse()
