"""Symmetric group S_n, reduced words and positive-root sequences.

Permutations are tuples in window notation, roots are pairs ``(i, j)`` standing
for eps_i - eps_j (positive when i < j).  Reduced words are tuples of simple
reflection indices.
"""
from __future__ import annotations

from collections import deque
from functools import cache
from itertools import product
from typing import NamedTuple

Perm = tuple[int, ...]
Word = tuple[int, ...]


class Root(NamedTuple):
    i: int
    j: int

    @property
    def positive(self) -> bool:
        return self.i < self.j

    def __str__(self):
        return f"a{self.i},{self.j}"


class Move(NamedTuple):
    """An edge of the move graph: ``h`` letters precede the rewritten window."""
    src: Word
    dst: Word
    h: int
    case: int  # 1 = commutation s_i s_j, 2 = braid s_i s_j s_i


def _check(w, n):
    for a in w:
        if not 1 <= a <= n - 1:
            raise ValueError(f"index {a} out of range for n={n}")


def s(i: int, a: int) -> int:
    if a == i:
        return i + 1
    if a == i + 1:
        return i
    return a


def word_to_perm(w, n: int) -> Perm:
    """Window notation of s_{w1} s_{w2} ... (composition from the left)."""
    _check(w, n)
    p = list(range(1, n + 1))
    # (x s_i)(a) = x(s_i(a)): right multiplication swaps window positions
    for i in w:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def perm_length(p: Perm) -> int:
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def is_reduced(w, n: int) -> bool:
    return len(w) == perm_length(word_to_perm(w, n))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def reflect_root(i: int, r: Root) -> Root:
    return Root(s(i, r.i), s(i, r.j))


def simple_root(i: int) -> Root:
    return Root(i, i + 1)


def positive_roots(n: int) -> list[Root]:
    return [Root(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def beta_sequence(w, n: int) -> list[Root]:
    """beta_k = s_{w1} ... s_{w(k-1)} (alpha_{wk}) for a reduced word of w0."""
    if not is_reduced(w, n) or word_to_perm(w, n) != longest(n):
        raise ValueError(f"{tuple(w)} is not a reduced expression of w0 in S_{n}")
    out = []
    for k, i in enumerate(w):
        r = simple_root(i)
        for a in reversed(w[:k]):
            r = reflect_root(a, r)
        out.append(r)
    return out


def sigma_word(n: int) -> Word:
    """The fixed reduced word (1)(2,1)(3,2,1)...(n-1,...,1) of w0."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return tuple(a for k in range(1, n) for a in range(k, 0, -1))


def lemroot_position(i: int, j: int, n: int) -> int:
    """1-based position t of alpha_{i,j} in the beta sequence of sigma_word(n)."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i},{j}) n={n}")
    if j == i + 1:
        return i * (i + 1) // 2
    # the displayed reflection prefix has (j-2)(j-1)/2 + i - 1 letters, so the
    # root sits one position later
    return (j - 2) * (j - 1) // 2 + i


def moves_from(w: Word) -> list[Move]:
    out = []
    for h in range(len(w) - 1):
        a, b = w[h], w[h + 1]
        if abs(a - b) > 1:
            out.append(Move(w, w[:h] + (b, a) + w[h + 2:], h, 1))
        if h + 2 < len(w) and abs(a - b) == 1 and w[h + 2] == a:
            out.append(Move(w, w[:h] + (b, a, b) + w[h + 3:], h, 2))
    return out


def enumerate_reduced_words(p: Perm) -> tuple[set[Word], list[Move]]:
    """All reduced words of p (closure under Matsumoto moves) and the move graph."""
    n = len(p)
    start = _some_reduced_word(p)
    seen = {start}
    edges = []
    todo = deque([start])
    while todo:
        w = todo.popleft()
        for m in moves_from(w):
            edges.append(m)
            if m.dst not in seen:
                seen.add(m.dst)
                todo.append(m.dst)
    assert all(word_to_perm(w, n) == p for w in seen)
    return seen, edges


def _some_reduced_word(p: Perm) -> Word:
    # bubble sort: repeatedly strip a right descent
    p = list(p)
    out = []
    while True:
        for k in range(len(p) - 1):
            if p[k] > p[k + 1]:
                p[k], p[k + 1] = p[k + 1], p[k]
                out.append(k + 1)
                break
        else:
            break
    return tuple(reversed(out))


@cache
def brute_force_reduced_words(n: int) -> frozenset[Word]:
    """Every word of length l(w0) whose product is w0 (independent of moves)."""
    N = n * (n - 1) // 2
    w0 = longest(n)
    return frozenset(w for w in product(range(1, n), repeat=N) if word_to_perm(w, n) == w0)


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))
