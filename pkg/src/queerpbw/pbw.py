"""Truncated PBW checks shared by both engines.

A truncation bounds the E/F-degree and, per Cartan group (K_i with K_i^-1,
h_i, or a single odd Cartan letter), the number of Cartan letters.  Within a
truncation, normal words are a basis of the normal-form space, so PBW
monomials form a basis there iff their normal forms are independent, stay
inside the truncation, and span every truncated normal word.
"""
from __future__ import annotations

from collections import defaultdict

from . import superalg as sa
from .exactla import Echelon
from .report import Report


def root_weight(p: int, q: int, rank: int) -> tuple:
    """eps_p - eps_q in simple-root coordinates."""
    lo, hi = min(p, q), max(p, q)
    sgn = 1 if p < q else -1
    return tuple(sgn if lo <= a < hi else 0 for a in range(1, rank + 1))


def block_monomials(roots, D: int, vec, power, unit: sa.Element, rank: int):
    """(label, weight, parity, degree, element) for ordered products over ``roots``.

    ``vec(p, q, barred)`` returns a root vector and ``power(x, a)`` the a-th
    (possibly divided) power.  Labels list (p, q, a, b) for the factor
    x_{p,q}^a xb_{p,q}^b; the height sum is at most D.
    """
    out = []

    def rec(k, deg, label, wt, par, val):
        if k == len(roots):
            out.append((tuple(label), wt, par, deg, val))
            return
        p, q = roots[k]
        ht = abs(p - q)
        rw = root_weight(p, q, rank)
        for a in range(0, (D - deg) // ht + 1):
            for b in (0, 1):
                if deg + ht * (a + b) > D:
                    continue
                x = val
                if a:
                    x = x * power(vec(p, q, False), a)
                if b:
                    x = x * vec(p, q, True)
                w2 = tuple(u + (a + b) * r for u, r in zip(wt, rw))
                rec(k + 1, deg + ht * (a + b), label + [(p, q, a, b)] if (a or b) else label,
                    w2, (par + b) % 2, x)

    rec(0, 0, [], tuple([0] * rank), 0, unit)
    return out


def block_key(x: sa.Element, rank: int):
    return (sa.weight_of(x, rank), x.parity())


def normal_words(system, letters, D: int, group, limits: dict) -> list[tuple]:
    """All normal words with E/F-degree <= D and group counts within ``limits``.

    ``group(a)`` names the Cartan group of letter ``a`` (None for E/F letters).
    Subwords of normal words are normal, so extending normal words one letter
    at a time reaches them all.
    """
    out = [()]
    frontier = [((), 0, {})]
    while frontier:
        nxt = []
        for w, d, counts in frontier:
            for a in letters:
                g = group(a)
                if g is None:
                    if d + 1 > D:
                        continue
                    c2, d2 = counts, d + 1
                else:
                    if counts.get(g, 0) + 1 > limits[g]:
                        continue
                    c2 = dict(counts)
                    c2[g] = c2.get(g, 0) + 1
                    d2 = d
                u = w + (a,)
                if system.is_normal_word(u):
                    out.append(u)
                    nxt.append((u, d2, c2))
        frontier = nxt
    return out


def check_truncation(system, rank: int, monomials, words, claim: str, anchor: str,
                     indices: dict) -> list[Report]:
    """Rank, closure and span checks per (weight, parity) block.

    ``monomials`` is a list of (label, element); ``words`` the truncated normal
    words.  Returns one report per block plus a summary.
    """
    wordset = set(words)
    blocks = defaultdict(list)
    for label, x in monomials:
        nx = system.normal_form(x)
        blocks[block_key(x, rank)].append((label, nx))
    wblocks = defaultdict(list)
    for w in words:
        wblocks[block_key(sa.Element.word(w), rank)].append(w)
    out = []
    total = {"monomials": 0, "words": 0, "rank": 0}
    for key in sorted(set(blocks) | set(wblocks), key=str):
        mons = blocks.get(key, [])
        ws = wblocks.get(key, [])
        col = {w: k for k, w in enumerate(ws)}
        ech = Echelon()
        outside = [lab for lab, nx in mons if any(w not in wordset for w in nx.terms)]
        for _, nx in mons:
            vec = {}
            for w, c in nx.terms.items():
                k = col.get(w)
                if k is None:
                    k = col[w] = len(col)
                vec[k] = c
            ech.add(vec)
        missing = [w for w in ws if not ech.contains({col[w]: 1})]
        r = ech.rank
        total["monomials"] += len(mons)
        total["words"] += len(ws)
        total["rank"] += r
        ok = r == len(mons) and not missing and not outside
        idx = dict(indices, weight=list(key[0]), parity=key[1])
        data = {"monomials": len(mons), "normal_words": len(ws), "rank": r}
        if ok:
            out.append(Report(claim + ".block", anchor, idx, "pass", data=data))
        else:
            witness = (f"rank {r} of {len(mons)}",
                       [sa.to_text(sa.Element.word(w)) for w in missing[:5]],
                       [str(lab) for lab in outside[:5]])
            out.append(Report(claim + ".block", anchor, idx, "fail", witness, data=data))
    ok = all(x.ok for x in out)
    out.append(Report(claim, anchor, indices, "pass" if ok else "fail",
                      None if ok else ("see block reports",), data=total))
    return out


class BlockSolver:
    """Coordinates of normal forms in a fixed family of independent elements.

    Families are grouped into (weight, parity) blocks on demand; ``basis_for``
    maps a block key to the list of (label, element) in that block.
    """

    def __init__(self, system, rank: int, basis_for):
        self.system = system
        self.rank = rank
        self.basis_for = basis_for
        self._blocks: dict = {}

    def _block(self, key):
        hit = self._blocks.get(key)
        if hit is None:
            labels, cols, ech = [], {}, Echelon(track=True)
            for label, x in self.basis_for(key):
                nx = self.system.normal_form(x)
                vec = {}
                for w, c in nx.terms.items():
                    k = cols.setdefault(w, len(cols))
                    vec[k] = c
                if not ech.add(vec):
                    raise ArithmeticError(f"basis element {label} is dependent")
                labels.append(label)
            hit = self._blocks[key] = (labels, cols, ech)
        return hit

    def solve(self, x: sa.Element) -> dict | None:
        nx = self.system.normal_form(x)
        if not nx:
            return {}
        labels, cols, ech = self._block(block_key(nx, self.rank))
        vec = {}
        for w, c in nx.terms.items():
            k = cols.get(w)
            if k is None:
                return None
            vec[k] = c
        sol = ech.solve(vec)
        if sol is None:
            return None
        return {labels[k]: c for k, c in sol.items() if c}


class TriangularFamily:
    """Products minus * cartan * plus with combined E/F-degree <= D.

    ``minus`` and ``plus`` come from :func:`block_monomials`; ``cartan`` is a
    list of (label, parity, element).  Blocks are indexed lazily by weight.
    """

    def __init__(self, minus, cartan, plus, D: int):
        self.minus, self.cartan, self.plus, self.D = minus, cartan, plus, D
        self._by_weight = None

    def _index(self):
        if self._by_weight is None:
            idx = defaultdict(list)
            for lm, wm, pm, dm, xm in self.minus:
                for lp, wp, pp, dp, xp in self.plus:
                    if dm + dp <= self.D:
                        idx[tuple(a + b for a, b in zip(wm, wp))].append(
                            (lm, lp, (pm + pp) % 2, xm, xp))
            self._by_weight = idx
        return self._by_weight

    def block(self, key):
        weight, parity = key
        out = []
        for lm, lp, par, xm, xp in self._index().get(tuple(weight), []):
            for lc, pc, xc in self.cartan:
                if (par + pc) % 2 == parity:
                    out.append(((lm, lc, lp), xm * xc * xp))
        return out

    def all(self):
        out = []
        for lm, lp, par, xm, xp in (t for v in self._index().values() for t in v):
            for lc, pc, xc in self.cartan:
                out.append(((lm, lc, lp), xm * xc * xp))
        return out


def degree_table(reports) -> dict:
    """Per-degree counts from the block reports of a U^+ or U^- check.

    There the weight fixes the degree (sum of its coordinates, up to sign).
    """
    table: dict = {}
    for r in reports:
        if not r.claim_id.endswith(".block"):
            continue
        d = abs(sum(r.indices["weight"]))
        row = table.setdefault(d, {"monomials": 0, "normal_words": 0, "rank": 0})
        for k in row:
            row[k] += r.data[k]
    return dict(sorted(table.items()))


def check_family(system, rank: int, fam: TriangularFamily, letters, group, limits: dict,
                 prefix: str, anchors: dict, indices: dict) -> list[Report]:
    """Run :func:`check_truncation` on the plus, minus, cartan and full parts.

    ``anchors`` maps each part name to its anchor string.  The plus and minus
    summaries carry a ``per_degree`` table.
    """
    raising = [a for a in letters if sa.kind_of(a) in sa.RAISING_KINDS]
    lowering = [a for a in letters if sa.kind_of(a) in sa.LOWERING_KINDS]
    cartan = [a for a in letters if group(a) is not None]
    out = []
    for name, mons, alphabet in (("plus", fam.plus, raising), ("minus", fam.minus, lowering)):
        words = normal_words(system, alphabet, fam.D, group, limits)
        reps = check_truncation(system, rank, [(m[0], m[4]) for m in mons], words,
                                f"{prefix}.{name}", anchors[name], dict(indices, part=name))
        reps[-1].data["per_degree"] = degree_table(reps)
        out += reps
    words = normal_words(system, cartan, 0, group, limits)
    out += check_truncation(system, rank, [(lab, x) for lab, _, x in fam.cartan], words,
                            f"{prefix}.cartan", anchors["cartan"], dict(indices, part="cartan"))
    words = normal_words(system, letters, fam.D, group, limits)
    out += check_truncation(system, rank, fam.all(), words, prefix, anchors["full"],
                            dict(indices, part="full"))
    return out
