"""Acceptance criteria 1-11.  Each test records one PASS/FAIL line."""
import time

import pytest

from queerpbw import classical as c
from queerpbw import quantum as q
from queerpbw.cli import _rewriting_suite, completion_report
from queerpbw.report import summary
from queerpbw.weyl import brute_force_reduced_words, enumerate_reduced_words, longest

from acceptance_log import record


def _ok(reports):
    reports = list(reports)
    return bool(reports) and all(r.verdict == "pass" for r in reports), reports


def _count(reports):
    s = summary(reports)
    return f"{s['pass']} pass, {s['fail']} fail, {s['unknown']} unknown"


def test_criterion_01_quantum_braid_relations():
    t = time.perf_counter()
    ok3, r3 = _ok(q.verify_braid_relations(3))
    t3 = time.perf_counter()
    ok4, r4 = _ok(q.verify_braid_relations(4))
    t4 = time.perf_counter() - t3
    ok = ok3 and ok4 and t4 < 60
    record(1, ok, f"quantum braid relations n=3 ({_count(r3)}), n=4 ({_count(r4)}, {t4:.1f}s)")
    assert ok, (t3 - t, t4)


def test_criterion_02_quantum_automorphism():
    ok2, r2 = _ok(q.verify_automorphism(2))
    t = time.perf_counter()
    ok3, r3 = _ok(q.verify_automorphism(3, 6))
    dt = time.perf_counter() - t
    ok = ok2 and ok3 and dt < 120
    record(2, ok, f"T_i images of QQ1-QQ6 vanish, n=2 ({_count(r2)}), n=3 ({_count(r3)}, {dt:.1f}s)")
    assert ok


def test_criterion_03_inverses_and_misprint():
    reps = q.verify_inverses(2) + q.verify_inverses(3)
    ok_fixed = all(r.ok for r in reps)
    printed = q.verify_inverses(2, printed=True) + q.verify_inverses(3, printed=True)
    bad = [r for r in printed if r.verdict == "fail"]
    kb_bad = [r for r in bad if r.indices["gen"].startswith("Kb")]
    # the printed T_i^-1(Kb_i) must fail and nothing outside the flagged entries may fail
    flagged = all(r.indices["gen"].startswith(("Kb", "Eb")) for r in bad)
    ok = ok_fixed and bool(kb_bad) and flagged
    record(3, ok, f"T_i T_i^-1 = T_i^-1 T_i = id, n<=3 ({_count(reps)}); printed T_i^-1 fails on "
                  f"{len(kb_bad)} Kb checks and {len(bad) - len(kb_bad)} Eb checks (misprints)")
    assert ok


def test_criterion_04_example_tables():
    ok, reps = _ok(q.verify_example_tables())
    raw = [r for r in reps if r.claim_id == "quantum.example_raw"]
    eight = q.root_vector(3, 1, 2, True, w=(2, 1, 2), raw=True)
    ok = ok and len(eight.terms) == 8 and len(raw) == 9
    record(4, ok, f"n=3 root-vector tables reproduced as raw T-images ({_count(reps)}), "
                  f"8-term Eb^gamma_12 exact")
    assert ok


def test_criterion_05_classical_braid_and_automorphism():
    reps = []
    for n in (2, 3, 4):
        reps += c.verify_braid_relations(n) + c.verify_automorphism(n) + c.verify_inverses(n)
        reps += c.verify_classicalnote2(n) + c.verify_cor_classical_1(n)
    reps += c.verify_example_tables()
    ok, reps = _ok(reps)
    record(5, ok, f"classical braid, automorphism, inverse, note2, cor1 at n<=4 and "
                  f"example tables ({_count(reps)})")
    assert ok


def test_criterion_06_commutation_table():
    reps = c.verify_commutation_table(3) + c.verify_commutation_table(4)
    ok, reps = _ok(reps)
    flagged = sum(1 for r in reps if r.note.startswith("known discrepancy"))
    record(6, ok, f"commutation table n=3,4 ({_count(reps)}; {flagged} cases via known-discrepancy list)")
    assert ok


def test_criterion_07_sign_theorem():
    t = time.perf_counter()
    counts = {n: len(enumerate_reduced_words(longest(n))[0]) for n in (3, 4)}
    brute = {n: len(brute_force_reduced_words(n)) for n in (3, 4)}
    reps = c.verify_sign_theorem(3) + c.verify_sign_theorem(4)
    ok, reps = _ok(reps)
    signs = {r.data.get("r") for r in reps if r.claim_id == "classical.sign"}
    dt = time.perf_counter() - t
    ok = ok and counts == brute == {3: 2, 4: 16} and signs <= {1, -1} and dt < 300
    record(7, ok, f"sign theorem, {counts[3]} and {counts[4]} reduced words (brute force agrees), "
                  f"signs {sorted(signs)} ({_count(reps)}, {dt:.1f}s)")
    assert ok


def test_criterion_08_quantum_root_vector_forms():
    reps = q.verify_cor_rv(3) + q.verify_cor_rv(4)
    forms = [r for r in reps if r.claim_id != "quantum.dw_scalar"]
    scalars = [r for r in reps if r.claim_id == "quantum.dw_scalar"]
    forms_ok = all(r.ok for r in forms)
    units = all(r.ok for r in scalars)
    twisted = {r.data.get("scalar_vinv") for r in scalars if not r.ok}
    record(8, forms_ok and units,
           f"nested v-brackets and middle-index independence hold ({_count(forms)}); "
           f"E^sigma vs X scalars: {_count(scalars)}; the failing pairs are not proportional, "
           f"E^sigma = c * X with v -> v^-1 and c in {sorted(twisted)}")
    assert forms_ok
    assert all(t in ("1", "-1") for t in twisted)
    if not units:
        pytest.xfail("E^sigma_ij and X_ij differ by v <-> v^-1 for j-i >= 2, so no unit "
                     "scalar +-v^k relates them (see decisions ledger)")


def test_criterion_09_pbw_truncations():
    t = time.perf_counter()
    reps = (q.pbw_basis_check(2, 4, c=4) + q.pbw_basis_check(3, 3, c=1)
            + c.pbw_check(2, 4, c=4) + c.pbw_check(3, 3, c=1))
    z = c.zform_spot_checks(2, 4) + c.zform_spot_checks(3, 4)
    dt = time.perf_counter() - t
    ok, reps = _ok(reps + z)
    full = {(r.claim_id, r.indices["n"]): r.data["rank"] for r in reps
            if r.claim_id in ("quantum.pbw", "classical.pbw")}
    ok = ok and dt < 600
    record(9, ok, f"PBW independence and spanning, quantum and classical, n=2 D<=4 and n=3 D<=3 "
                  f"(full ranks {full}); Z-form spot checks integral; {dt:.0f}s")
    assert ok


def test_criterion_10_prop5():
    ok, reps = _ok(q.verify_prop5(3))
    record(10, ok, f"T_w(K_gamma) = K_w(gamma) for all w in S_3 and sampled gamma ({_count(reps)})")
    assert ok


def test_criterion_11_rewriting_properties():
    props = _rewriting_suite("quantum", 3, None, 0) + _rewriting_suite("classical", 3, None, 0)
    comp = [completion_report(e, n) for e in ("quantum", "classical") for n in (2, 3, 4)]
    ok, reps = _ok(props + comp)
    unresolved = sum(r.data["unresolved"] for r in comp)
    record(11, ok, f"idempotence, linearity, weight, parity on 1000 samples per engine; "
                   f"completion at default degrees, {unresolved} unresolved overlaps")
    assert ok
