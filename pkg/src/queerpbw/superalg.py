"""Free associative superalgebra on the quantum and classical alphabets.

Letters are small integers ``kind * 32 + index`` so that words are plain tuples
of ints; integer comparison of letters is the letter rank used by the word
order in :mod:`queerpbw.rewrite`.  Multiplication is concatenation with no
signs; the super sign only enters :func:`superbracket`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .scalars import Scalar

# kind ranks; the order F < Fb < K < Kinv < Kb < E < Eb is the letter rank
F, FB, K, KINV, KB, E, EB = range(7)
CF, CFB, CH, CHB, CE, CEB = range(8, 14)

KIND_NAMES = {F: "F", FB: "Fb", K: "K", KINV: "Kinv", KB: "Kb", E: "E", EB: "Eb",
              CF: "f", CFB: "fb", CH: "h", CHB: "hb", CE: "e", CEB: "eb"}
NAME_KINDS = {v: k for k, v in KIND_NAMES.items()}
LATEX_NAMES = {F: "F", FB: r"\bar F", K: "K", KINV: "K^{-1}", KB: r"\bar K",
               E: "E", EB: r"\bar E", CF: "f", CFB: r"\bar f", CH: "h", CHB: r"\bar h",
               CE: "e", CEB: r"\bar e"}

QUANTUM_KINDS = frozenset({F, FB, K, KINV, KB, E, EB})
CLASSICAL_KINDS = frozenset({CF, CFB, CH, CHB, CE, CEB})
ODD_KINDS = frozenset({FB, KB, EB, CFB, CHB, CEB})
CARTAN_KINDS = frozenset({K, KINV, KB, CH, CHB})
RAISING_KINDS = frozenset({E, EB, CE, CEB})
LOWERING_KINDS = frozenset({F, FB, CF, CFB})
# letters counted by the E/F-degree
EF_KINDS = RAISING_KINDS | LOWERING_KINDS

Word = tuple[int, ...]


def letter(kind: int, index: int) -> int:
    if not 0 < index < 32:
        raise ValueError(f"index {index} out of range")
    return kind * 32 + index


def kind_of(a: int) -> int:
    return a >> 5


def index_of(a: int) -> int:
    return a & 31


def is_odd(a: int) -> bool:
    return (a >> 5) in ODD_KINDS


def is_ef(a: int) -> bool:
    return (a >> 5) in EF_KINDS


def family_of(a: int) -> str:
    return "quantum" if (a >> 5) in QUANTUM_KINDS else "classical"


def letter_str(a: int) -> str:
    return f"{KIND_NAMES[a >> 5]}[{a & 31}]"


def letter_latex(a: int) -> str:
    k = a >> 5
    if k == KINV:
        return f"K_{{{a & 31}}}^{{-1}}"
    return f"{LATEX_NAMES[k]}_{{{a & 31}}}"


def word_parity(w: Word) -> int:
    return sum(1 for a in w if (a >> 5) in ODD_KINDS) & 1


def ef_degree(w: Word) -> int:
    return sum(1 for a in w if (a >> 5) in EF_KINDS)


def _is_zero(c) -> bool:
    return not c


class AlphabetMismatch(ValueError):
    pass


class Element:
    """Finite linear combination of words; coefficients are Scalar or Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] | None = None):
        self.terms: dict[Word, object] = {w: c for w, c in (terms or {}).items() if c}

    # constructors
    @classmethod
    def _raw(cls, terms: dict) -> "Element":
        x = cls.__new__(cls)
        x.terms = terms
        return x

    @classmethod
    def gen(cls, kind: int, index: int, coeff=1) -> "Element":
        return cls._raw({(letter(kind, index),): coeff})

    @classmethod
    def word(cls, w: Iterable[int], coeff=1) -> "Element":
        return cls._raw({tuple(w): coeff}) if coeff else cls._raw({})

    @classmethod
    def scalar(cls, c) -> "Element":
        return cls._raw({(): c}) if c else cls._raw({})

    @classmethod
    def zero(cls) -> "Element":
        return cls._raw({})

    # inspection
    def family(self) -> str | None:
        for w in self.terms:
            if w:
                return family_of(w[0])
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def words(self):
        return self.terms.keys()

    def coeff(self, w: Word):
        return self.terms.get(tuple(w), 0)

    def parity(self) -> int | None:
        ps = {word_parity(w) for w in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def degree(self) -> int:
        return max((ef_degree(w) for w in self.terms), default=0)

    # arithmetic
    def __add__(self, o):
        o = _as_element(o)
        if not o.terms:
            return self
        t = dict(self.terms)
        add_into(t, o.terms)
        return Element._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-_as_element(o))

    def __rsub__(self, o):
        return _as_element(o) - self

    def __mul__(self, o):
        if isinstance(o, Element):
            return multiply(self, o)
        return self.scale(o)

    def __rmul__(self, o):
        return self.scale(o)

    def __truediv__(self, c):
        return Element._raw({w: x / c for w, x in self.terms.items()})

    def scale(self, c) -> "Element":
        if not c:
            return Element._raw({})
        return Element._raw({w: x * c for w, x in self.terms.items() if x * c})

    def map_coeffs(self, fn) -> "Element":
        return Element({w: fn(c) for w, c in self.terms.items()})

    def __pow__(self, k: int):
        out = Element.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        if not isinstance(o, Element):
            o = _as_element(o)
        if self.terms.keys() != o.terms.keys():
            return False
        return all(c == o.terms[w] for w, c in self.terms.items())

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __repr__(self):
        return f"Element({to_text(self)})"

    def __str__(self):
        return to_text(self)


def _as_element(x) -> Element:
    if isinstance(x, Element):
        return x
    return Element.scalar(x)


def add_into(t: dict, o: Mapping, scale=None) -> None:
    """t += scale * o, dropping zero coefficients (in place)."""
    for w, c in o.items():
        if scale is not None:
            c = c * scale
        old = t.get(w)
        if old is None:
            if c:
                t[w] = c
        else:
            s = old + c
            if s:
                t[w] = s
            else:
                del t[w]


def multiply(x: Element, y: Element) -> Element:
    fx, fy = x.family(), y.family()
    if fx and fy and fx != fy:
        raise AlphabetMismatch("alphabet mismatch")
    t: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            add_into(t, {a + b: ca * cb})
    return Element._raw(t)


def superbracket(x: Element, y: Element) -> Element:
    """[x, y] = xy - (-1)^{p(x)p(y)} yx for parity-homogeneous x, y."""
    px, py = x.parity(), y.parity()
    if px is None or py is None:
        raise ValueError("superbracket needs parity-homogeneous arguments")
    sign = -1 if px * py else 1
    return x * y - (y * x).scale(sign)


def qbracket(x: Element, y: Element, c) -> Element:
    """[x, y]_c = xy - c yx (no parity sign)."""
    return x * y - (y * x).scale(c)


@dataclass
class GenMap:
    """Substitution map on generators; unlisted letters are fixed."""
    images: dict[int, Element] = field(default_factory=dict)
    anti: bool = False
    bar: bool = False
    name: str = ""

    def check_parity(self) -> None:
        for a, img in self.images.items():
            p = img.parity()
            if img and p != (1 if is_odd(a) else 0):
                raise ValueError(f"image of {letter_str(a)} has wrong parity")


def _twist(c, bar: bool):
    if bar and isinstance(c, Scalar):
        return c.bar()
    return c


def apply_genmap(m: GenMap, x: Element) -> Element:
    t: dict = {}
    for w, c in x.terms.items():
        c = _twist(c, m.bar)
        seq = reversed(w) if m.anti else w
        cur = {(): 1}
        for a in seq:
            img = m.images.get(a)
            if img is None:
                cur = {u + (a,): cu for u, cu in cur.items()}
                continue
            nxt: dict = {}
            for u, cu in cur.items():
                for v_, cv in img.terms.items():
                    add_into(nxt, {u + v_: cu * _twist(cv, m.bar)})
            cur = nxt
        add_into(t, cur, c)
    return Element._raw(t)


def compose(*maps: GenMap):
    """Callable applying maps right-to-left, like T_a T_b (x) = T_a(T_b(x))."""
    def run(x: Element) -> Element:
        for m in reversed(maps):
            x = apply_genmap(m, x)
        return x
    return run


def weight_of(x: Element, rank: int | None = None):
    """Root-lattice weight in the basis of simple roots, or 'inhomogeneous'."""
    if rank is None:
        rank = max((a & 31 for w in x.terms for a in w), default=1)
    ws = set()
    for w in x.terms:
        vec = [0] * rank
        for a in w:
            k = a >> 5
            if k in RAISING_KINDS:
                vec[(a & 31) - 1] += 1
            elif k in LOWERING_KINDS:
                vec[(a & 31) - 1] -= 1
        ws.add(tuple(vec))
    if len(ws) > 1:
        return "inhomogeneous"
    return ws.pop() if ws else tuple([0] * rank)


# ---------------------------------------------------------------- printing

def _vpow(k: int) -> str:
    return "v" if k == 1 else f"v^{k}"


def _coeff_text(c) -> tuple[str, str]:
    """(sign, body) where body is '' for unit coefficients."""
    if isinstance(c, Scalar):
        u = c.is_unit_monomial()
        if u is not None:
            sgn, k = u
            return ("-" if sgn < 0 else "+"), ("" if k == 0 else _vpow(k))
        if c.is_laurent():
            terms = c.laurent_terms()
            if len(terms) == 1:
                (k, a), = terms.items()
                body = str(abs(a)) + ("" if k == 0 else "*" + _vpow(k))
                return ("-" if a < 0 else "+"), body
            return "+", f"({c})"
        neg = Scalar(-c.num, c.den, _canonical=True)
        if str(neg).count("-") < str(c).count("-"):
            return "-", f"({neg})"
        return "+", f"({c})"
    c = Fraction(c)
    sgn = "-" if c < 0 else "+"
    c = abs(c)
    if c == 1:
        return sgn, ""
    return sgn, str(c)


def to_text(x: Element) -> str:
    if not x.terms:
        return "0"
    parts = []
    for w in sorted(x.terms, key=lambda w: (len(w), w)):
        sgn, body = _coeff_text(x.terms[w])
        factors = ([body] if body else []) + [letter_str(a) for a in w]
        if not factors:
            factors = ["1"]
        parts.append((sgn, "*".join(factors)))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sgn, body in parts[1:]:
        s += f" {sgn} {body}"
    return s


def _coeff_latex(c) -> tuple[str, str]:
    if isinstance(c, Scalar):
        u = c.is_unit_monomial()
        if u is not None:
            sgn, k = u
            return ("-" if sgn < 0 else "+"), ("" if k == 0 else ("v" if k == 1 else f"v^{{{k}}}"))
        terms = c.laurent_terms() if c.is_laurent() else {}
        if len(terms) == 1:
            (k, a), = terms.items()
            body = str(abs(a)) + ("" if k == 0 else ("v" if k == 1 else f"v^{{{k}}}"))
            return ("-" if a < 0 else "+"), body
        txt = str(c).replace("^-1", "^{-1}")
        txt = re.sub(r"\^(-?\d+)", r"^{\1}", txt).replace("*", "")
        return "+", f"({txt})"
    c = Fraction(c)
    sgn = "-" if c < 0 else "+"
    c = abs(c)
    if c == 1:
        return sgn, ""
    if c.denominator == 1:
        return sgn, str(c)
    return sgn, rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def to_latex(x: Element) -> str:
    if not x.terms:
        return "0"
    parts = []
    for w in sorted(x.terms, key=lambda w: (len(w), w)):
        sgn, body = _coeff_latex(x.terms[w])
        mono = " ".join(letter_latex(a) for a in w)
        parts.append((sgn, (body + " " + mono).strip() or "1"))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sgn, body in parts[1:]:
        s += f" {sgn} {body}"
    return s


def random_element(rng, letters, coeff, max_terms: int = 4, max_len: int = 5) -> Element:
    """Random element over ``letters``; ``coeff(rng)`` draws a nonzero coefficient."""
    t: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(0, max_len)))
        add_into(t, {w: coeff(rng)})
    return Element._raw(t)
