"""Hypothesis strategies shared by the test modules."""
from fractions import Fraction

from hypothesis import strategies as st

from queerpbw import classical, quantum
from queerpbw.scalars import Scalar
from queerpbw.superalg import Element

laurent = st.dictionaries(st.integers(-2, 2), st.integers(-3, 3), min_size=1, max_size=3) \
    .map(Scalar.laurent).filter(bool)
rationals = st.fractions(min_value=-4, max_value=4, max_denominator=4).filter(bool)


def quantum_scalars():
    # occasionally a genuine rational function, to exercise (num)/(den) printing
    frac = st.tuples(laurent, laurent).map(lambda p: p[0] / (p[1] + Scalar(7))).filter(bool)
    return st.one_of(laurent, laurent, frac)


def elements(engine: str, n: int, max_len: int = 4, max_terms: int = 4):
    if engine == "quantum":
        letters, coeffs = sorted(quantum.generator_letters(n)), quantum_scalars()
    else:
        letters, coeffs = classical.letters(n), rationals
    words = st.lists(st.sampled_from(letters), max_size=max_len).map(tuple)
    return st.dictionaries(words, coeffs, max_size=max_terms).map(Element)


def homogeneous(engine: str, n: int, parity: int):
    """Monomials times a scalar: always parity-homogeneous with the given parity."""
    return elements(engine, n, max_terms=1).filter(
        lambda x: bool(x) and x.parity() == parity)


def scalar_for(engine: str):
    return quantum_scalars() if engine == "quantum" else rationals


def frac(a, b=1):
    return Fraction(a, b)
