"""Finite groups as multiplication tables built from permutations.

Elements are the permutations in the closure of the given generators,
sorted lexicographically on their image tuples, so the identity is always
element 0.  The product ``x * y`` means "apply ``x`` then ``y``".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

Perm = Tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` then ``q``."""
    return tuple(q[i] for i in p)


def perm_closure(gens: Sequence[Perm]) -> List[Perm]:
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


class GroupTableError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroupTable:
    name: str
    table: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        self.validate()

    @property
    def order(self) -> int:
        return len(self.table)

    @classmethod
    def from_permutations(cls, name: str, gens: Sequence[Perm]) -> "FiniteGroupTable":
        elems = perm_closure([tuple(g) for g in gens])
        index = {e: i for i, e in enumerate(elems)}
        table = tuple(tuple(index[compose(a, b)] for b in elems) for a in elems)
        return cls(name, table)

    def validate(self) -> None:
        n = len(self.table)
        t = self.table
        if n == 0 or any(len(row) != n for row in t):
            raise GroupTableError(f"{self.name}: table is not square")
        for row in t:
            if sorted(row) != list(range(n)):
                raise GroupTableError(f"{self.name}: a row is not a permutation")
        if any(t[0][j] != j or t[j][0] != j for j in range(n)):
            raise GroupTableError(f"{self.name}: element 0 is not the identity")
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = ta[b]
                tb = t[b]
                for c in range(n):
                    if t[tab][c] != ta[tb[c]]:
                        raise GroupTableError(f"{self.name}: not associative")

    def inverses(self) -> List[int]:
        return [row.index(0) for row in self.table]

    def element_orders(self) -> List[int]:
        out = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self.table[x][a]
                k += 1
            out.append(k)
        return out

    def subgroup_generated(self, elems) -> set:
        t = self.table
        seen = {0}
        frontier = [0]
        gens = list(set(elems))
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = t[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def to_json_obj(self) -> Dict:
        return {
            "name": self.name,
            "order": self.order,
            "table": [list(r) for r in self.table],
        }

    @classmethod
    def from_json_obj(cls, obj: Dict) -> "FiniteGroupTable":
        g = cls(obj["name"], tuple(tuple(r) for r in obj["table"]))
        if g.order != obj["order"]:
            raise GroupTableError(f"{g.name}: declared order {obj['order']} != {g.order}")
        return g


def cyclic(n: int) -> FiniteGroupTable:
    return FiniteGroupTable.from_permutations(f"Z{n}", [tuple((i + 1) % n for i in range(n))])


def dihedral(n: int) -> FiniteGroupTable:
    """Dihedral group of order ``2n`` acting on an ``n``-gon."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return FiniteGroupTable.from_permutations(f"D{2 * n}", [rot, ref])


def symmetric(n: int) -> FiniteGroupTable:
    if n == 1:
        return FiniteGroupTable("S1", ((0,),))
    gens = [tuple([1, 0] + list(range(2, n))), tuple((i + 1) % n for i in range(n))]
    return FiniteGroupTable.from_permutations(f"S{n}", gens)


def alternating(n: int) -> FiniteGroupTable:
    gens = []
    for i in range(n - 2):
        p = list(range(n))
        p[i], p[i + 1], p[i + 2] = p[i + 1], p[i + 2], p[i]
        gens.append(tuple(p))
    return FiniteGroupTable.from_permutations(f"A{n}", gens)


BATTERY_NAMES = ("Z6", "S3", "D8", "D10", "D12", "A4", "S4")

_BUILDERS = {
    "Z6": lambda: cyclic(6),
    "S3": lambda: symmetric(3),
    "D6": lambda: dihedral(3),
    "D8": lambda: dihedral(4),
    "D10": lambda: dihedral(5),
    "D12": lambda: dihedral(6),
    "A4": lambda: alternating(4),
    "S4": lambda: symmetric(4),
}

_CACHE: Dict[str, FiniteGroupTable] = {}


def group_by_name(name: str) -> FiniteGroupTable:
    if name not in _CACHE:
        if name in _BUILDERS:
            _CACHE[name] = _BUILDERS[name]()
        elif name.startswith("D") and name[1:].isdigit() and int(name[1:]) % 2 == 0:
            _CACHE[name] = dihedral(int(name[1:]) // 2)
        elif name.startswith("Z") and name[1:].isdigit():
            _CACHE[name] = cyclic(int(name[1:]))
        else:
            raise KeyError(f"unknown group {name!r}; known: {sorted(_BUILDERS)}")
    return _CACHE[name]


def battery(names: Sequence[str] = BATTERY_NAMES) -> List[FiniteGroupTable]:
    return [group_by_name(n) for n in names]


def battery_json(names: Sequence[str] = BATTERY_NAMES) -> str:
    return json.dumps({"groups": [g.to_json_obj() for g in battery(names)]},
                      sort_keys=True, separators=(",", ":"))


def all_permutations(n: int) -> List[Perm]:
    return sorted(permutations(range(n)))
