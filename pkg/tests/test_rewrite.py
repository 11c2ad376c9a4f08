import pytest
from hypothesis import given, settings

from queerpbw import classical as c
from queerpbw import quantum as q
from queerpbw.quantum import E, Eb, F, K, Kb, Kinv
from queerpbw.rewrite import (InconsistentPresentation, RewriteSystem, orient, property_failures,
                              quantum_order)
from queerpbw.scalars import ONE, V, VINV
from queerpbw.superalg import Element

from strategies import elements, scalar_for


def _word(x):
    (w,) = x.terms
    return w


def _rel(n, label):
    return dict(q.presentation_uvqn(n))[label]


def test_orient_examples():
    order = quantum_order(2)
    r = orient(_rel(2, "QQ4 E1F1"), order)
    assert r.lhs == _word(E(1) * F(1))
    cartan = (K(1) * Kinv(2) - Kinv(1) * K(2)).scale(ONE / (V - VINV))
    assert r.rhs == F(1) * E(1) + cartan
    r = orient(_rel(2, "QQ1 K1K1^-1"), order)
    assert r.lhs == _word(K(1) * Kinv(1)) and r.rhs == q.one()
    r = orient(_rel(2, "QQ5 Eb1^2"), order)
    assert r.lhs == _word(Eb(1) * Eb(1))
    assert r.rhs == (E(1) * E(1)).scale(-(V - VINV) / (V + VINV))


def test_orient_errors():
    with pytest.raises(InconsistentPresentation):
        orient(Element.scalar(ONE + ONE), quantum_order(2))
    with pytest.raises(ValueError):
        orient(Element.zero(), quantum_order(2))


def test_normal_form_examples():
    s = q.system(2)
    want = F(1) * E(1) + (K(1) * Kinv(2) - Kinv(1) * K(2)).scale(ONE / (V - VINV))
    assert s.normal_form(E(1) * F(1)) == want
    s3 = q.system(3)
    serre = E(1) * E(1) * E(2) - (E(1) * E(2) * E(1)).scale(V + VINV) + E(2) * E(1) * E(1)
    assert not s3.normal_form(serre)


def test_decide_equal_examples():
    s = q.system(3)
    t1e2 = q.apply_word(3, (1,), E(2))
    assert s.decide_equal(t1e2, -(E(1) * E(2)) + (E(2) * E(1)).scale(VINV)) == "equal"
    assert s.decide_equal(E(1), F(1)) == "distinct"
    s2 = q.system(2)
    rhs = -(K(2) * Kb(2) * E(1)).scale(V) + K(2) * E(1) * Kb(2)
    assert s2.decide_equal(Eb(1), rhs) == "equal"


def test_decide_unknown_beyond_degree():
    s = RewriteSystem(quantum_order(2), relations=q.relations(2))
    s.degree = 1
    x = E(1) * E(1) * E(1)
    assert s.decide_equal(x, x + E(1) * E(1) * Eb(1)).startswith("unknown")


def test_completion_fixture_n2():
    rep = q.completed_system(2, 6)
    s = RewriteSystem(quantum_order(2), relations=q.relations(2))
    r = s.complete_to_degree(6)
    assert r.as_dict() == {"rules": 51, "overlaps_tested": r.overlaps_tested,
                           "overlaps_deferred": 0, "degree": 6}
    assert len(rep.rules) == 51
    assert s.certify(6) == []


def test_completion_confluent_input_unchanged():
    rel = K(1) * K(2) - K(2) * K(1)
    s = RewriteSystem(quantum_order(2), relations=[rel])
    before = dict(s.rules)
    s.complete_to_degree(4)
    assert s.rules == before


def test_classical_completion_n3():
    s = c.system(3, 6)
    assert s.certify(6) == []
    # PBW words are fixed points
    for w in s.rules:
        assert not s.is_normal_word(w)


def test_rules_interreduced():
    s = q.system(3)
    for l in s.rules:
        for m in s.rules:
            if l != m:
                assert not any(l[k:k + len(m)] == m for k in range(len(l) - len(m) + 1))


@pytest.mark.parametrize("engine", ["quantum", "classical"])
def test_properties_on_samples(engine):
    mod = q if engine == "quantum" else c
    s = mod.system(3)

    @settings(max_examples=150, deadline=None)
    @given(elements(engine, 3, max_len=5), elements(engine, 3, max_len=5),
           scalar_for(engine), scalar_for(engine))
    def run(x, y, a, b):
        assert property_failures(s, x, y, a, b, 2) == []

    run()


def test_property_checker_detects_breakage():
    class Broken:
        def normal_form(self, x):
            return x + x  # not idempotent, still linear
    x = E(1)
    assert "idempotence" in property_failures(Broken(), x, x, ONE, ONE, 1)
