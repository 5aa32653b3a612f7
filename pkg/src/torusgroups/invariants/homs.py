"""Homomorphisms from a finitely presented group into a finite group.

Backtracking over generator images with relator pruning: a relator whose
generators are all assigned must evaluate to the identity, and a relator
with a single unassigned generator occurring exactly once forces that
generator's image.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..presentation import Presentation
from .groups import FiniteGroupTable


class _Problem:
    def __init__(self, p: Presentation, g: FiniteGroupTable):
        self.gens = list(p.generators)
        idx = {x: i for i, x in enumerate(self.gens)}
        self.rels: List[List[Tuple[int, int]]] = []
        for r in p.relators:
            r = r.cyclically_reduced()
            if r:
                self.rels.append([(idx[x], e) for x, e in r.letters])
        self.rel_gens = [frozenset(i for i, _ in r) for r in self.rels]
        self.mul = [list(row) for row in g.table]
        self.inv = g.inverses()
        self.n = g.order
        self.k = len(self.gens)
        # branch on generators that close relators early
        occ = [0] * self.k
        for gs in self.rel_gens:
            for i in gs:
                occ[i] += 1
        self.priority = occ

    def _eval(self, rel, img) -> int:
        mul, inv = self.mul, self.inv
        x = 0
        for i, e in rel:
            y = img[i]
            x = mul[x][y if e == 1 else inv[y]]
        return x

    def propagate(self, img: List[int]) -> Optional[List[int]]:
        """Return extended assignment, or ``None`` on contradiction."""
        img = list(img)
        mul, inv = self.mul, self.inv
        changed = True
        while changed:
            changed = False
            for rel, gs in zip(self.rels, self.rel_gens):
                unknown = [i for i in gs if img[i] < 0]
                if not unknown:
                    if self._eval(rel, img) != 0:
                        return None
                    continue
                if len(unknown) != 1:
                    continue
                u = unknown[0]
                pos = [t for t, (i, _) in enumerate(rel) if i == u]
                if len(pos) != 1:
                    continue
                t = pos[0]
                e = rel[t][1]
                # x^e * W = 1 with W the cyclic remainder after position t
                w = 0
                for i, s in rel[t + 1:] + rel[:t]:
                    y = img[i]
                    w = mul[w][y if s == 1 else inv[y]]
                img[u] = inv[w] if e == 1 else w
                changed = True
        return img

    def choose(self, img: List[int]) -> int:
        best, score = -1, None
        for i in range(self.k):
            if img[i] >= 0:
                continue
            # prefer generators completing or nearly completing relators
            s = 0
            for gs in self.rel_gens:
                if i in gs:
                    missing = sum(1 for j in gs if img[j] < 0)
                    s += 4 ** max(0, 4 - missing)
            key = (s, self.priority[i], -i)
            if score is None or key > score:
                best, score = i, key
        return best

    def solutions(self) -> Iterator[List[int]]:
        start = self.propagate([-1] * self.k)
        if start is None:
            return
        stack = [start]
        while stack:
            img = stack.pop()
            i = self.choose(img)
            if i < 0:
                yield img
                continue
            for x in range(self.n - 1, -1, -1):
                nxt = list(img)
                nxt[i] = x
                nxt = self.propagate(nxt)
                if nxt is not None:
                    stack.append(nxt)


def iter_homs(p: Presentation, g: FiniteGroupTable) -> Iterator[Dict[str, int]]:
    prob = _Problem(p, g)
    for img in prob.solutions():
        yield dict(zip(prob.gens, img))


def hom_count(p: Presentation, g: FiniteGroupTable) -> int:
    return sum(1 for _ in _Problem(p, g).solutions())


def epi_exists(p: Presentation, g: FiniteGroupTable) -> bool:
    for img in _Problem(p, g).solutions():
        if len(g.subgroup_generated(img)) == g.order:
            return True
    return False


def hom_search(p: Presentation, g: FiniteGroupTable, mode: str = "count"):
    if mode == "count":
        return hom_count(p, g)
    if mode == "epi_exists":
        return epi_exists(p, g)
    raise ValueError(f"unknown mode {mode!r}")


def spectrum(p: Presentation, groups: Sequence[FiniteGroupTable]) -> Dict[str, int]:
    return {g.name: hom_count(p, g) for g in groups}
