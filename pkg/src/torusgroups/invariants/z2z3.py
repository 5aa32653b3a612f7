"""Normal forms in ``Z2 * Z3 = <u, v | u^2, v^3>`` and epimorphism checks onto it.

A normal form is a tuple of syllables, each ``0`` (for ``u``), ``1``
(``v``) or ``2`` (``v^2``), strictly alternating between ``u`` and
``v``-powers.  The reduced braid group maps onto it by ``s1 -> v^2 u``,
``s2 -> u v^-1``.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

from ..presentation import Presentation
from ..word import parse_word

U = 0


class Z2Z3Word(tuple):
    """Alternating normal form; construct through :func:`z2z3` or :meth:`parse`."""

    def __new__(cls, syllables: Iterable[int] = ()):
        out: list = []
        for s in syllables:
            _push(out, s)
        return super().__new__(cls, out)

    def __mul__(self, other: "Z2Z3Word") -> "Z2Z3Word":
        out = list(self)
        for s in other:
            _push(out, s)
        return tuple.__new__(Z2Z3Word, out)

    def inverse(self) -> "Z2Z3Word":
        return tuple.__new__(Z2Z3Word, [s if s == U else 3 - s for s in reversed(self)])

    def syllable_length(self) -> int:
        return len(self)

    @classmethod
    def parse(cls, text: str) -> "Z2Z3Word":
        """Accept tokens ``u``, ``v``, ``v^2``, ``v^-1``, ``u^-1``, or ``1``."""
        syl = []
        for tok in text.split():
            if tok == "1":
                continue
            if tok in ("u", "u^-1"):
                syl.append(U)
            elif tok == "v":
                syl.append(1)
            elif tok in ("v^2", "v^-1"):
                syl.append(2)
            elif tok in ("v^-2",):
                syl.append(1)
            else:
                raise ValueError(f"bad Z2*Z3 token {tok!r}")
        return cls(syl)

    def __str__(self) -> str:
        if not self:
            return "1"
        return " ".join({0: "u", 1: "v", 2: "v^2"}[s] for s in self)


def _push(out: list, s: int) -> None:
    if s not in (0, 1, 2):
        raise ValueError(f"bad syllable {s!r}")
    if not out:
        out.append(s)
        return
    last = out[-1]
    if s == U and last == U:
        out.pop()
    elif s != U and last != U:
        t = (last + s) % 3
        if t == 0:
            out.pop()
        else:
            out[-1] = t
    else:
        out.append(s)


E = Z2Z3Word()
UW = Z2Z3Word([U])
VW = Z2Z3Word([1])
SIGMA1 = Z2Z3Word([2, U])
SIGMA2 = Z2Z3Word([U, 2])


def z2z3(text: str) -> Z2Z3Word:
    return Z2Z3Word.parse(text)


def image(word, assignment: Mapping[str, Z2Z3Word]) -> Z2Z3Word:
    out = E
    for g, e in word.letters:
        x = assignment[g]
        out = out * (x if e == 1 else x.inverse())
    return out


def generates(images: Iterable[Z2Z3Word], max_syllables: int = 8) -> bool:
    """Whether ``u`` and ``v`` are reached by products of the images.

    Breadth-first closure restricted to elements of syllable length at most
    ``max_syllables``; a ``False`` answer only means "not found at this bound".
    """
    gens = set()
    for x in images:
        gens.add(x)
        gens.add(x.inverse())
    gens.discard(E)
    seen = {E}
    frontier = [E]
    need = {UW, VW}
    while frontier and need - seen:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if len(y) <= max_syllables and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return need <= seen


def rb3_verify(p: Presentation, assignment: Mapping[str, Z2Z3Word], max_syllables: int = 8) -> bool:
    """True iff ``assignment`` kills every relator and its image is all of ``Z2 * Z3``."""
    missing = set(p.generators) - set(assignment)
    if missing:
        return False
    for r in p.relators:
        if image(r, assignment):
            return False
    return generates([assignment[g] for g in p.generators], max_syllables)


def braid_assignment(sigma1: Iterable[str], sigma2: Iterable[str]) -> Dict[str, Z2Z3Word]:
    """Send the first group of generators to ``s1`` and the second to ``s2``."""
    out = {g: SIGMA1 for g in sigma1}
    out.update({g: SIGMA2 for g in sigma2})
    return out




def rb3_presentation() -> Presentation:
    """``<u, v | u^2, v^3>``."""
    return Presentation(("u", "v"), (parse_word("u u"), parse_word("v v v")))
