"""Abelianization through the Smith normal form of the relator matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..presentation import Presentation


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z_{d1} + ... + Z_{dk} + Z^rank`` with ``d1 | d2 | ...`` and ``di >= 2``."""

    torsion: Tuple[int, ...]
    rank: int

    def __post_init__(self):
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion coefficients must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"divisibility chain broken: {a} does not divide {b}")
        if self.rank < 0:
            raise ValueError("rank must be non-negative")

    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self):
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        parts = [f"Z{d}" for d in self.torsion]
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero diagonal entries of the Smith normal form, in divisibility order."""
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        # pivot: nonzero entry of least absolute value in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    ai, at = a[i], a[t]
                    for j in range(t, cols):
                        ai[j] -= q * at[j]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a[t:]:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # the pivot must divide the whole remaining block
                bad = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                at, ab = a[t], a[bad]
                for j in range(t, cols):
                    at[j] += ab[j]
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            best = (t, t)
            for i in range(t, rows):
                if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, cols):
                if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                    best = (t, j)
            i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def invariants_from_matrix(matrix: Sequence[Sequence[int]], ncols: int) -> AbelianInvariants:
    diag = smith_diagonal(matrix) if matrix else []
    torsion = tuple(d for d in diag if d > 1)
    return AbelianInvariants(torsion, ncols - len(diag))


def relator_matrix(p: Presentation) -> List[List[int]]:
    idx = {g: i for i, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for g, e in r.letters:
            row[idx[g]] += e
        rows.append(row)
    return rows


def abelianization(p: Presentation) -> AbelianInvariants:
    return invariants_from_matrix(relator_matrix(p), len(p.generators))


def parse_abelian(text: str) -> AbelianInvariants:
    """Inverse of ``str``: ``"Z2 + Z"``, ``"Z6"``, ``"Z^2 + Z2"`` or ``"0"``."""
    torsion, rank = [], 0
    text = text.replace(" ", "")
    if text in ("", "0", "1"):
        return AbelianInvariants((), 0)
    for part in text.split("+"):
        if part == "Z":
            rank += 1
        elif part.startswith("Z^"):
            rank += int(part[2:])
        elif part.startswith("Z"):
            torsion.append(int(part[1:]))
        else:
            raise ValueError(f"cannot parse abelian group {text!r}")
    # re-derive the canonical chain from the given cyclic factors
    diag = smith_diagonal([[d if i == j else 0 for j in range(len(torsion))]
                           for i, d in enumerate(torsion)]) if torsion else []
    return AbelianInvariants(tuple(d for d in diag if d > 1), rank)
