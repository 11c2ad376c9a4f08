"""Root vectors T_{i1}...T_{i(t-1)}(x_{it}) attached to a reduced word of w0.

Shared by both engines: the caller passes the braid map constructor and the
four generator families.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import superalg as sa
from .superalg import Element
from .weyl import Root, beta_sequence


@dataclass
class RootVector:
    """Root vector for the root eps_i - eps_j (i > j means a negative root)."""
    i: int
    j: int
    barred: bool
    value: Element
    word: tuple
    t: int
    normal: Element | None = field(default=None, compare=False)

    @property
    def root(self) -> Root:
        return Root(self.i, self.j)

    @property
    def key(self) -> tuple[int, int, bool]:
        return (self.i, self.j, self.barred)


def build_root_vectors(n: int, word, braid: Callable, gens: dict,
                       normalize: Callable | None = None, raw: bool = True) -> list[RootVector]:
    """``gens`` maps each of 'e', 'eb', 'f', 'fb' to a one-argument constructor.

    Returns 4N vectors; positive ones are labelled (i, j), negative (j, i).
    With ``normalize`` the vector is also computed with a normal form taken
    after every T step, which keeps the degree at the root height instead of
    letting raw images grow exponentially.  ``raw=False`` skips the raw image
    (``value`` then holds the normal form).
    """
    if not raw and normalize is None:
        raise ValueError("raw=False needs a normalize function")
    word = tuple(word)
    betas = beta_sequence(word, n)
    out = []
    maps = {}
    for t, (a, r) in enumerate(zip(word, betas), start=1):
        prefix = word[:t - 1]
        for name, (p, q), barred in (("e", (r.i, r.j), False), ("eb", (r.i, r.j), True),
                                     ("f", (r.j, r.i), False), ("fb", (r.j, r.i), True)):
            x = y = gens[name](a)
            for b in reversed(prefix):
                m = maps.get(b)
                if m is None:
                    m = maps[b] = braid(n, b)
                if raw:
                    x = sa.apply_genmap(m, x)
                if normalize is not None:
                    y = normalize(sa.apply_genmap(m, y))
            out.append(RootVector(p, q, barred, x if raw else y, word, t,
                                  y if normalize is not None else None))
    return out


def by_key(vectors) -> dict:
    return {v.key: v for v in vectors}
