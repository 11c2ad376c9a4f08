"""Noncommutative rewriting modulo defining relations, with bounded completion.

Rules ``lhs -> rhs`` are oriented by a monoid word order.  Normal forms are
computed by appending letters one at a time to an already-normal word, so
only suffix matches need to be looked up; results are memoised per
``(normal word, letter)``.

Completion resolves critical pairs (suffix/prefix overlaps of two left-hand
sides) whose overlap word has E/F-degree at most ``D``.  Since the order
compares E/F-degree first, every word of degree <= D then has a unique normal
form (bounded diamond lemma).  :meth:`RewriteSystem.certify` re-checks all
such overlaps of the final rule set from scratch.
"""
from __future__ import annotations

import heapq
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .scalars import Scalar
from .superalg import (CEB, CFB, CHB, EB, EF_KINDS, FB, K, KB, KINV, Element, Word,
                       add_into, ef_degree, letter, letter_str, weight_of)

sys.setrecursionlimit(max(sys.getrecursionlimit(), 200000))


class InconsistentPresentation(ArithmeticError):
    pass


class WordOrder:
    """Monoid order on words.

    Compared in turn: E/F-letter count, length, counts of the priority
    letters (most significant first), number of inversions of letter ranks,
    then lexicographic order on letter ranks.  Each stage is compatible with
    concatenation once the earlier stages tie, so the whole order is.
    """

    def __init__(self, priority: Iterable[int], rank: Callable[[int], int] | None = None):
        self.priority = tuple(priority)
        self.rank = rank or (lambda a: a)
        self._rank: dict[int, int] = {}
        self._pos = {a: k for k, a in enumerate(self.priority)}
        self._cache: dict[Word, tuple] = {}

    def key(self, w: Word) -> tuple:
        k = self._cache.get(w)
        if k is not None:
            return k
        counts = [0] * len(self.priority)
        ef = 0
        pos = self._pos
        for a in w:
            if (a >> 5) in EF_KINDS:
                ef += 1
            p = pos.get(a)
            if p is not None:
                counts[p] += 1
        rk = self._rank
        r = []
        for a in w:
            x = rk.get(a)
            if x is None:
                x = rk[a] = self.rank(a)
            r.append(x)
        inv = 0
        for x in range(len(r)):
            rx = r[x]
            for y in range(x + 1, len(r)):
                if rx > r[y]:
                    inv += 1
        k = (ef, len(w), tuple(counts), inv, tuple(r))
        if len(self._cache) > 2_000_000:
            self._cache.clear()
        self._cache[w] = k
        return k

    def less(self, a: Word, b: Word) -> bool:
        return self.key(a) < self.key(b)

    def leading(self, words: Iterable[Word]) -> Word:
        return max(words, key=self.key)


def _quantum_rank(a: int) -> int:
    # K_i and K_i^-1 sit next to each other so that sorted Cartan words
    # bring inverse pairs together
    if a >> 5 == KINV:
        return 2 * (letter(K, a & 31)) + 1
    return 2 * a


def quantum_order(n: int) -> WordOrder:
    pr = [letter(KB, i) for i in range(1, n + 1)]
    pr += [letter(EB, i) for i in range(1, n)]
    pr += [letter(FB, i) for i in range(1, n)]
    return WordOrder(pr, _quantum_rank)


def classical_order(n: int) -> WordOrder:
    pr = [letter(CHB, i) for i in range(1, n + 1)]
    pr += [letter(CEB, i) for i in range(1, n)]
    pr += [letter(CFB, i) for i in range(1, n)]
    return WordOrder(pr)


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: Element

    def __str__(self):
        return f"{'*'.join(map(letter_str, self.lhs))} -> {self.rhs}"


def coerce_scalar(c):
    return Scalar.coerce(c)


def coerce_rational(c):
    if isinstance(c, Scalar):
        raise TypeError("rational engine got a Q(v) coefficient")
    return Fraction(c)


@dataclass
class CompletionReport:
    rules: int
    overlaps_tested: int
    overlaps_deferred: int
    degree: int

    def as_dict(self) -> dict:
        return {"rules": self.rules, "overlaps_tested": self.overlaps_tested,
                "overlaps_deferred": self.overlaps_deferred, "degree": self.degree}


def orient(relation: Element, order: WordOrder, coerce=coerce_scalar) -> RewriteRule:
    """Turn ``relation = 0`` into a rule with the order-maximal word on the left."""
    if not relation.terms:
        raise ValueError("cannot orient the zero relation")
    lead = order.leading(relation.terms)
    if lead == ():
        raise InconsistentPresentation("inconsistent presentation: nonzero scalar relation")
    c = coerce(relation.terms[lead])
    rhs = {w: -coerce(x) / c for w, x in relation.terms.items() if w != lead}
    return RewriteRule(lead, Element(rhs))


class RewriteSystem:
    def __init__(self, order: WordOrder, coerce: Callable = coerce_scalar,
                 relations: Iterable[Element] = (), name: str = ""):
        self.order = order
        self.coerce = coerce
        self.name = name
        self.rules: dict[Word, dict] = {}
        self._lengths: list[int] = []
        self._by_first: dict[int, list[Word]] = {}
        self._acache: dict = {}
        self._wcache: dict = {}
        self.degree = -1          # degree up to which overlaps are resolved
        self.certified = -1       # degree up to which certify() passed
        self.overlaps_tested = 0
        self.overlaps_deferred = 0
        self.unresolved: list[Word] = []
        self.relations = [self._coerced(r) for r in relations]
        for r in self.relations:
            self.add_relation(r, pairs=False)

    # ------------------------------------------------------------ basics
    def _coerced(self, x: Element) -> Element:
        return Element({w: self.coerce(c) for w, c in x.terms.items()})

    def rule_list(self) -> list[RewriteRule]:
        return [RewriteRule(l, Element(r)) for l, r in
                sorted(self.rules.items(), key=lambda kv: self.order.key(kv[0]))]

    def _reset_caches(self):
        self._acache.clear()
        self._wcache.clear()
        self._lengths = sorted({len(l) for l in self.rules})
        idx: dict[int, list[Word]] = {}
        for l in self.rules:
            idx.setdefault(l[0], []).append(l)
        self._by_first = idx

    # ------------------------------------------------------------ normal forms
    def _append(self, u: Word, a: int) -> dict:
        key = (u, a)
        hit = self._acache.get(key)
        if hit is not None:
            return hit
        w = u + (a,)
        rules = self.rules
        res = None
        for L in self._lengths:
            if L > len(w):
                break
            rhs = rules.get(w[len(w) - L:])
            if rhs is not None:
                p = w[:len(w) - L]
                res = {}
                for r, c in rhs.items():
                    add_into(res, self._mul_word(p, r), c)
                break
        if res is None:
            res = {w: self.coerce(1)}
        self._acache[key] = res
        return res

    def _mul_word(self, p: Word, r: Word) -> dict:
        """Normal form of p*r where p is normal."""
        cur = {p: self.coerce(1)}
        for a in r:
            nxt: dict = {}
            for u, c in cur.items():
                add_into(nxt, self._append(u, a), c)
            cur = nxt
        return cur

    def nf_word(self, w: Word) -> dict:
        hit = self._wcache.get(w)
        if hit is not None:
            return hit
        if not w:
            res = {(): self.coerce(1)}
        else:
            # find a cached prefix to extend
            k = len(w) - 1
            while k > 0 and w[:k] not in self._wcache:
                k -= 1
            cur = self._wcache.get(w[:k]) if k else {(): self.coerce(1)}
            for a in w[k:]:
                nxt: dict = {}
                for u, c in cur.items():
                    add_into(nxt, self._append(u, a), c)
                cur = nxt
            res = cur
        if len(self._wcache) > 500_000:
            self._wcache.clear()
        self._wcache[w] = res
        return res

    def nf_terms(self, terms: dict) -> dict:
        out: dict = {}
        for w, c in terms.items():
            add_into(out, self.nf_word(w), self.coerce(c))
        return out

    def normal_form(self, x: Element) -> Element:
        return Element._raw(self.nf_terms(x.terms))

    def is_normal_word(self, w: Word) -> bool:
        for i in range(len(w)):
            for L in self._lengths:
                if i + L > len(w):
                    break
                if w[i:i + L] in self.rules:
                    return False
        return True

    # ------------------------------------------------------------ completion
    def _orient_terms(self, t: dict):
        lead = max(t, key=self.order.key)
        if lead == ():
            raise InconsistentPresentation(f"inconsistent presentation at degree {self.degree}")
        c = t[lead]
        rhs = {w: -x / c for w, x in t.items() if w != lead}
        return lead, rhs

    def add_relation(self, rel: Element, pairs: bool = True) -> list[Word]:
        """Reduce, orient and insert a relation; returns lhs words added."""
        todo = [dict(rel.terms)]
        added = []
        while todo:
            t = self.nf_terms(todo.pop())
            if not t:
                continue
            lead, rhs = self._orient_terms(t)
            # interreduce: rules whose lhs contains the new lhs leave the system
            for l in [l for l in self.rules if _contains(l, lead)]:
                old = self.rules.pop(l)
                back = dict(old)
                back = {w: -c for w, c in back.items()}
                add_into(back, {l: self.coerce(1)})
                todo.append(back)
            self.rules[lead] = rhs
            added.append(lead)
            self._reset_caches()
        return added

    def overlaps(self, a: Word, b: Word):
        """Overlap words of a with b: a proper suffix of a equals a proper prefix of b."""
        for k in range(1, min(len(a), len(b))):
            if a[len(a) - k:] == b[:k]:
                yield k, a + b[k:]

    def _pair_diff(self, a: Word, b: Word, k: int) -> dict:
        ra, rb = self.rules.get(a), self.rules.get(b)
        left: dict = {}
        tail = b[k:]
        for w, c in ra.items():
            add_into(left, self.nf_word(w + tail), c)
        head = a[:len(a) - k]
        for w, c in rb.items():
            add_into(left, self.nf_word(head + w), -c)
        return left

    def complete_to_degree(self, D: int, max_length: int | None = None,
                           max_rules: int = 20000) -> CompletionReport:
        """Resolve all overlaps of E/F-degree <= D (and length <= max_length)."""
        heap: list = []
        counter = 0
        tested = 0
        deferred = set()

        def push_pairs(new: Word):
            nonlocal counter
            for other in list(self.rules):
                for a, b in ((new, other), (other, new)) if other != new else ((new, new),):
                    for k, W in self.overlaps(a, b):
                        d = ef_degree(W)
                        if d > D or (max_length is not None and len(W) > max_length):
                            deferred.add((a, b, k))
                            continue
                        counter += 1
                        heapq.heappush(heap, (d, len(W), counter, a, b, k))

        for l in list(self.rules):
            push_pairs(l)
        while heap:
            d, _, _, a, b, k = heapq.heappop(heap)
            if a not in self.rules or b not in self.rules:
                continue
            tested += 1
            diff = self._pair_diff(a, b, k)
            if diff:
                if len(self.rules) > max_rules:
                    raise RuntimeError("rule limit exceeded during completion")
                for l in self.add_relation(Element._raw(diff)):
                    if l in self.rules:
                        push_pairs(l)
        # tidy right-hand sides
        for l in list(self.rules):
            self.rules[l] = self.nf_terms(self.rules[l])
        self._reset_caches()
        live = {(a, b, k) for a, b, k in deferred if a in self.rules and b in self.rules}
        self.overlaps_tested += tested
        self.overlaps_deferred = len(live)
        self.degree = max(self.degree, D)
        return CompletionReport(len(self.rules), tested, len(live), D)

    def certify(self, D: int, max_length: int | None = None) -> list[Word]:
        """Recheck every overlap of degree <= D; returns the unresolved overlap words."""
        bad = []
        rules = list(self.rules)
        for a in rules:
            for b in rules:
                for k, W in self.overlaps(a, b):
                    if ef_degree(W) > D or (max_length is not None and len(W) > max_length):
                        continue
                    if self._pair_diff(a, b, k):
                        bad.append(W)
        self.unresolved = bad
        if not bad:
            self.certified = max(self.certified, D)
        return bad

    # ------------------------------------------------------------ decisions
    def decide_equal(self, x: Element, y: Element) -> str:
        d = x - y
        if not self.normal_form(d):
            return "equal"
        if max(self.degree, self.certified) >= d.degree():
            return "distinct"
        return f"unknown({d.degree()})"


def _contains(big: Word, small: Word) -> bool:
    n, m = len(big), len(small)
    if m > n:
        return False
    for i in range(n - m + 1):
        if big[i:i + m] == small:
            return True
    return False


def normal_form(s: RewriteSystem, x: Element) -> Element:
    return s.normal_form(x)


def complete_to_degree(s: RewriteSystem, D: int, **kw) -> CompletionReport:
    return s.complete_to_degree(D, **kw)


def decide_equal(s: RewriteSystem, x: Element, y: Element) -> str:
    return s.decide_equal(x, y)


def property_failures(s: RewriteSystem, x: Element, y: Element, a, b, rank: int) -> list[str]:
    """Names of the normal-form properties violated on the sample (x, y, a, b).

    Checked: idempotence, linearity, and that each word keeps its weight and
    parity under rewriting.
    """
    bad = []
    nx, ny = s.normal_form(x), s.normal_form(y)
    if s.normal_form(nx) != nx:
        bad.append("idempotence")
    if s.normal_form(x.scale(a) + y.scale(b)) != nx.scale(a) + ny.scale(b):
        bad.append("linearity")
    for w in x.terms:
        src = Element.word(w)
        img = s.normal_form(src)
        if img and weight_of(img, rank) != weight_of(src, rank):
            bad.append("weight")
            break
        if img and img.parity() != src.parity():
            bad.append("parity")
            break
    return bad
