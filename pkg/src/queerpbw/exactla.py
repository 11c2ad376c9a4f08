"""Sparse exact linear algebra over Q or Q(v).

Entries are any field elements supporting + - * / and truthiness
(``Fraction`` or :class:`queerpbw.scalars.Scalar`).  Vectors are dicts
column -> nonzero entry.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class SparseMatrix:
    rows: list[dict]
    ncols: int

    def __post_init__(self):
        self.rows = [{c: x for c, x in r.items() if x} for r in self.rows]

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def dense(self, zero=0):
        return [[r.get(c, zero) for c in range(self.ncols)] for r in self.rows]


def _axpy(y: dict, a, x: dict) -> None:
    """y -= a * x in place, dropping zeros."""
    for c, xc in x.items():
        t = y.get(c)
        t = -(a * xc) if t is None else t - a * xc
        if t:
            y[c] = t
        else:
            y.pop(c, None)


class Echelon:
    """Incrementally maintained row-echelon basis with optional provenance.

    Each stored row is normalised to pivot entry 1.  With ``track=True`` each
    row also remembers its expression in terms of the inserted vectors, so
    :meth:`solve` can return coordinates.
    """

    def __init__(self, track: bool = False):
        self.pivots: dict = {}          # pivot column -> row
        self.combos: dict = {}          # pivot column -> {input index: coeff}
        self.track = track
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, vec: dict, combo: dict | None):
        v = dict(vec)
        while v:
            # eliminate the smallest column that has a pivot
            hit = None
            for c in sorted(v):
                if c in self.pivots:
                    hit = c
                    break
            if hit is None:
                break
            a = v[hit]
            _axpy(v, a, self.pivots[hit])
            if combo is not None:
                _axpy(combo, a, self.combos[hit])
        return v

    def add(self, vec: dict) -> bool:
        """Insert a vector; True iff it increased the rank."""
        idx = self.count
        self.count += 1
        combo = {idx: 1} if self.track else None
        r = self._reduce(vec, combo)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {c: x * inv for c, x in r.items()}
        self.pivots[p] = r
        if combo is not None:
            self.combos[p] = {k: x * inv for k, x in combo.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self._reduce(vec, None)

    def solve(self, vec: dict) -> dict | None:
        """Coefficients c with vec = sum c[k] * input_k, or None if outside the span.

        Only meaningful when the inserted vectors were independent.
        """
        if not self.track:
            raise ValueError("solve needs track=True")
        combo: dict = {}
        r = self._reduce(vec, combo)
        if r:
            return None
        return {k: -x for k, x in combo.items()}


def rank(m: SparseMatrix) -> int:
    e = Echelon()
    for r in m.rows:
        e.add(r)
    return e.rank


def row_reduce(m: SparseMatrix) -> SparseMatrix:
    """Reduced row echelon form (rows sorted by pivot column)."""
    e = Echelon()
    for r in m.rows:
        e.add(r)
    cols = sorted(e.pivots)
    rows = {c: dict(e.pivots[c]) for c in cols}
    # back substitution to clear entries above pivots
    for c in reversed(cols):
        for d in cols:
            if d < c and c in rows[d]:
                _axpy(rows[d], rows[d][c], rows[c])
    return SparseMatrix([rows[c] for c in cols], m.ncols)


@dataclass
class Coordinates:
    matrix: SparseMatrix
    words: list = field(default_factory=list)

    def column(self, w) -> int:
        return self.words.index(w)


def coordinatize(elems, words=None) -> Coordinates:
    """Coefficient matrix of elements, one column per distinct word.

    ``words`` may fix (a prefix of) the column order; new words are appended
    in sorted order.
    """
    order = list(words or [])
    index = {w: k for k, w in enumerate(order)}
    extra = sorted({w for x in elems for w in x.terms if w not in index},
                   key=lambda w: (len(w), w))
    for w in extra:
        index[w] = len(order)
        order.append(w)
    rows = [{index[w]: c for w, c in x.terms.items()} for x in elems]
    return Coordinates(SparseMatrix(rows, len(order)), order)


def vector(x, index: dict) -> dict:
    """Element -> sparse vector, extending ``index`` with unseen words."""
    out = {}
    for w, c in x.terms.items():
        k = index.get(w)
        if k is None:
            k = index[w] = len(index)
        out[k] = c
    return out
