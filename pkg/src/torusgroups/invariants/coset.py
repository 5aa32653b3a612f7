"""Todd-Coxeter coset enumeration (HLT strategy, no lookahead).

Cosets are defined in order and every live coset is scanned against each
relator in turn, defining new cosets to close the scan.  Coincidences are
processed with a union-find queue.  The enumeration is deterministic.
"""

from __future__ import annotations

from typing import List, Sequence

from ..presentation import Presentation
from ..word import Word

DEFAULT_LIMIT = 1_000_000


class CosetOverflow(RuntimeError):
    """The live coset count exceeded the budget; says nothing about finiteness."""

    def __init__(self, limit: int):
        super().__init__(f"coset enumeration exceeded {limit} cosets")
        self.limit = limit


def _columns(w: Word, index) -> List[int]:
    return [2 * index[g] + (0 if e == 1 else 1) for g, e in w.letters]


class _Enumerator:
    def __init__(self, ngens: int, limit: int):
        self.ncols = 2 * ngens
        self.limit = limit
        self.tab: List[List[int]] = [[-1] * self.ncols]
        self.parent: List[int] = [0]
        self.live = 1

    def define(self, c: int, x: int) -> int:
        d = len(self.tab)
        self.live += 1
        if self.live > self.limit:
            raise CosetOverflow(self.limit)
        self.tab.append([-1] * self.ncols)
        self.parent.append(d)
        self.tab[c][x] = d
        self.tab[d][x ^ 1] = c
        return d

    def rep(self, c: int) -> int:
        parent = self.parent
        r = c
        while parent[r] != r:
            r = parent[r]
        while parent[c] != r:
            parent[c], c = r, parent[c]
        return r

    def _merge(self, k: int, l: int, queue: list) -> None:
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        if k > l:
            k, l = l, k
        self.parent[l] = k
        queue.append(l)
        self.live -= 1

    def coincidence(self, a: int, b: int) -> None:
        tab = self.tab
        queue: list = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            row = tab[e]
            for x in range(self.ncols):
                f = row[x]
                if f < 0:
                    continue
                xi = x ^ 1
                if tab[f][xi] == e:
                    tab[f][xi] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if tab[e1][x] >= 0:
                    self._merge(f1, tab[e1][x], queue)
                elif tab[f1][xi] >= 0:
                    self._merge(e1, tab[f1][xi], queue)
                else:
                    tab[e1][x] = f1
                    tab[f1][xi] = e1

    def scan_and_fill(self, c: int, rel: Sequence[int]) -> None:
        tab = self.tab
        f, b = c, c
        i, j = 0, len(rel) - 1
        while True:
            while i <= j:
                nxt = tab[f][rel[i]]
                if nxt < 0:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i:
                nxt = tab[b][rel[j] ^ 1]
                if nxt < 0:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                tab[f][rel[i]] = b
                tab[b][rel[i] ^ 1] = f
                return
            self.define(f, rel[i])


def todd_coxeter(p: Presentation, subgroup: Sequence[Word] = (), limit: int = DEFAULT_LIMIT) -> int:
    """Index of ``<subgroup>`` in the group of ``p``.

    Raises :class:`CosetOverflow` when more than ``limit`` cosets are live.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    index = {g: i for i, g in enumerate(p.generators)}
    rels = [_columns(r.cyclically_reduced(), index) for r in p.relators]
    rels = [r for r in rels if r]
    subs = [_columns(w, index) for w in subgroup if w]
    en = _Enumerator(len(p.generators), limit)
    if en.ncols == 0:
        return 1
    for w in subs:
        en.scan_and_fill(0, w)
    c = 0
    while c < len(en.tab):
        if en.parent[c] == c:
            for r in rels:
                if en.parent[c] != c:
                    break
                en.scan_and_fill(c, r)
            if en.parent[c] == c:
                row = en.tab[c]
                for x in range(en.ncols):
                    if row[x] < 0:
                        en.define(c, x)
        c += 1
    return en.live


def group_order(p: Presentation, limit: int = DEFAULT_LIMIT) -> int:
    return todd_coxeter(p, (), limit)
