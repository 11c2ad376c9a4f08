from itertools import product
from random import Random

import sympy

from queerpbw import quantum as q
from queerpbw.exactla import Echelon, SparseMatrix, coordinatize, rank, row_reduce
from queerpbw.scalars import ONE, V, Scalar
from queerpbw.superalg import ef_degree


def test_rank_examples():
    eye = SparseMatrix([{0: ONE}, {1: ONE}, {2: ONE}], 3)
    assert rank(eye) == 3
    assert rank(SparseMatrix([{0: ONE, 1: V}, {0: V, 1: V * V}], 2)) == 1
    assert rank(SparseMatrix([], 0)) == 0


def test_coordinatize_examples():
    co = coordinatize([q.E(1), q.E(1).scale(V)])
    assert co.matrix.nrows == 2 and co.matrix.ncols == 1
    assert rank(co.matrix) == 1
    co = coordinatize([])
    assert co.matrix.nrows == 0 and co.matrix.ncols == 0


def _random_matrix(rng, rows, cols):
    m = []
    for _ in range(rows):
        r = {}
        for col in range(cols):
            if rng.random() < 0.6:
                x = Scalar.laurent({rng.randint(-1, 2): rng.randint(-2, 2)})
                if x:
                    r[col] = x
        m.append(r)
    # force some dependence
    if rows > 2:
        m[-1] = {k: m[0].get(k, Scalar(0)) * V + m[1].get(k, Scalar(0))
                 for k in set(m[0]) | set(m[1])}
    return SparseMatrix(m, cols)


def _sympy_rank(m):
    v = sympy.Symbol("v")
    def conv(x):
        num = sum(int(c) * v ** k for k, c in enumerate(x.num.coeffs()))
        den = sum(int(c) * v ** k for k, c in enumerate(x.den.coeffs()))
        return num / den
    return sympy.Matrix([[conv(r[c]) if c in r else 0 for c in range(m.ncols)]
                         for r in m.rows]).rank(simplify=True)


def test_rank_matches_sympy():
    rng = Random(7)
    for _ in range(12):
        m = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        assert rank(m) == _sympy_rank(m)


def test_row_reduce_invariants():
    rng = Random(3)
    for _ in range(10):
        m = _random_matrix(rng, 4, 5)
        rr = row_reduce(m)
        assert rank(rr) == rank(m) == rr.nrows
        scaled = SparseMatrix([{k: x * (V + 2) for k, x in r.items()} for r in reversed(m.rows)], m.ncols)
        assert rank(scaled) == rank(m)
        pivots = [min(r) for r in rr.rows]
        for r, p in zip(rr.rows, pivots):
            assert r[p] == ONE
            assert all(p not in other for other in rr.rows if other is not r)


def test_solve_with_provenance():
    e = Echelon(track=True)
    assert e.add({0: ONE, 1: V})
    assert e.add({1: ONE})
    assert not e.add({0: ONE + ONE, 1: V + V})
    assert e.solve({0: ONE, 1: V + ONE}) == {0: ONE, 1: ONE}
    assert e.solve({2: ONE}) is None


def _count_monomials(heights, d):
    # each root gives x^a (a >= 0) and an odd flag b in {0, 1}
    return sum(1 for ex in product(range(d + 1), repeat=len(heights)) for bs in product((0, 1), repeat=len(heights))
               if sum((a + b) * h for a, b, h in zip(ex, bs, heights)) == d)


def test_degree_two_pbw_full_rank_n3():
    fam = q.PBWFamily(3, 2, 0)
    mons = [m[4] for m in fam.plus if m[3] == 2]
    assert len(mons) == _count_monomials([1, 2, 1], 2) == 10
    s = q.system(3)
    co = coordinatize([s.normal_form(x) for x in mons])
    assert rank(co.matrix) == len(mons)


def test_normal_words_rank_n2():
    # normal forms of all words of degree <= 3 in E1, Eb1 span a space of the PBW size
    s = q.system(2)
    letters = [a for a in q.letters(2) if a // 32 in (5, 6)]
    words = [w for k in range(4) for w in product(letters, repeat=k)]
    co = coordinatize([s.normal_form(q.Element.word(w, ONE)) for w in words])
    assert all(ef_degree(w) <= 3 for w in co.words)
    assert rank(co.matrix) == sum(_count_monomials([1], d) for d in range(4)) == 7
