import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from queerpbw import quantum as q
from queerpbw import superalg as sa
from queerpbw.classical import e, f, hb
from queerpbw.quantum import E, Eb, F, K, Kb
from queerpbw.scalars import V, VINV
from queerpbw.superalg import Element, GenMap, apply_genmap, superbracket, weight_of

from strategies import elements, homogeneous


def test_multiply_examples():
    x = E(1) * E(2)
    assert x.terms == {(sa.letter(sa.E, 1), sa.letter(sa.E, 2)): 1}
    one = q.one()
    assert one * E(1) == E(1)
    with pytest.raises(sa.AlphabetMismatch):
        E(1) * e(1)


@given(elements("quantum", 3), elements("quantum", 3), elements("quantum", 3))
def test_bilinear(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert z * (x + y) == z * x + z * y


def test_superbracket_examples():
    assert superbracket(hb(1), hb(2)) == hb(1) * hb(2) + hb(2) * hb(1)
    assert superbracket(e(1), f(2)) == e(1) * f(2) - f(2) * e(1)
    assert superbracket(Eb(1), Eb(1)) == (Eb(1) * Eb(1)).scale(2)
    with pytest.raises(ValueError):
        superbracket(E(1) + Eb(1), F(1))


@given(st.sampled_from([0, 1]), st.sampled_from([0, 1]), st.data())
def test_super_antisymmetry(p, r, data):
    x = data.draw(homogeneous("classical", 3, p))
    y = data.draw(homogeneous("classical", 3, r))
    assert superbracket(x, y) == -superbracket(y, x).scale((-1) ** (p * r))


def test_genmap_examples():
    T1 = q.quantum_braid(3, 1)
    assert apply_genmap(T1, E(2)) == -(E(1) * E(2)) + (E(2) * E(1)).scale(VINV)
    om = q.omega_quantum(2)
    assert apply_genmap(om, E(1).scale(V)) == F(1).scale(VINV)
    x = E(1) * F(2) + K(1)
    assert apply_genmap(GenMap(), x) == x


@settings(max_examples=50, deadline=None)
@given(elements("quantum", 3), elements("quantum", 3))
def test_genmap_multiplicative(x, y):
    T1 = q.quantum_braid(3, 1)
    assert apply_genmap(T1, x * y) == apply_genmap(T1, x) * apply_genmap(T1, y)
    om = q.omega_quantum(3)
    assert apply_genmap(om, x * y) == apply_genmap(om, y) * apply_genmap(om, x)


def test_weight_examples():
    assert weight_of(E(1) * E(2), 2) == (1, 1)
    assert weight_of(E(1) + F(1), 1) == "inhomogeneous"
    assert weight_of(Kb(2) * K(1), 2) == (0, 0)
    assert weight_of(hb(1) * e(1), 1) == (1,)


@pytest.mark.parametrize("n", [2, 3])
def test_relations_homogeneous(n):
    from queerpbw import classical as c
    for _, rel in q.presentation_uvqn(n):
        assert weight_of(rel, n - 1) != "inhomogeneous"
        assert rel.parity() is not None
    for _, rel in c.presentation_qn(n):
        assert weight_of(rel, n - 1) != "inhomogeneous"
        assert rel.parity() is not None


@given(elements("quantum", 3, max_terms=1), elements("quantum", 3, max_terms=1))
def test_weight_additive(x, y):
    if x and y:
        assert weight_of(x * y, 2) == tuple(a + b for a, b in zip(weight_of(x, 2), weight_of(y, 2)))


def test_printing():
    x = -(E(1) * E(2)) + (E(2) * E(1)).scale(VINV)
    assert sa.to_text(x) == "-E[1]*E[2] + v^-1*E[2]*E[1]"
    assert sa.to_text(Element.zero()) == "0"
    assert sa.to_text(F(1).scale(V - VINV)) == "(v - v^-1)*F[1]"
    assert sa.to_latex(x) == "-E_{1} E_{2} + v^{-1} E_{2} E_{1}"
