"""Braids and their right Hurwitz action on a free group.

The generator ``s_i`` acts on an ordered basis ``(e_1, ..., e_n)`` by::

    e_i     -> e_i e_{i+1} e_i^-1
    e_{i+1} -> e_i

Braid words are read left to right: the image of ``w`` under ``b1 b2`` is
the image under ``b2`` of the image under ``b1``.  With this convention the
full twist acts as conjugation by the boundary word ``e_1 e_2 ... e_n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .word import IDENTITY, Word, WordError, check_generator, substitute

_BRAID_TOKEN = re.compile(r"s(\d+)(?:\^(-?\d+))?\Z")


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class Braid:
    strands: int
    letters: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BraidError("a braid needs at least two strands")
        for i, e in self.letters:
            if not 1 <= i < self.strands:
                raise BraidError(f"index s{i} out of range for B_{self.strands}")
            if e not in (1, -1):
                raise BraidError(f"braid letter exponent must be +-1, got {e}")

    @classmethod
    def sigma(cls, strands: int, i: int, power: int = 1) -> "Braid":
        sign = 1 if power > 0 else -1
        return cls(strands, ((i, sign),) * abs(power))

    @classmethod
    def full_twist(cls, strands: int) -> "Braid":
        """``(s_1 s_2 ... s_{n-1})^n``."""
        cyc = tuple((i, 1) for i in range(1, strands))
        return cls(strands, cyc * strands)

    def __mul__(self, other: "Braid") -> "Braid":
        if self.strands != other.strands:
            raise BraidError("strand counts differ")
        return Braid(self.strands, self.letters + other.letters)

    def __pow__(self, n: int) -> "Braid":
        if n < 0:
            return self.inverse() ** (-n)
        return Braid(self.strands, self.letters * n)

    def inverse(self) -> "Braid":
        return Braid(self.strands, tuple((i, -e) for i, e in reversed(self.letters)))

    def __str__(self) -> str:
        return format_braid(self)


def _letter_map(i: int, sign: int, basis: Sequence[str]) -> Dict[str, Word]:
    a = Word.gen(basis[i - 1])
    b = Word.gen(basis[i])
    m = {g: Word.gen(g) for g in basis}
    if sign == 1:
        m[basis[i - 1]] = a * b * a.inverse()
        m[basis[i]] = a
    else:
        m[basis[i - 1]] = b
        m[basis[i]] = b.inverse() * a * b
    return m


def automorphism(b: Braid, basis: Sequence[str]) -> Dict[str, Word]:
    """Images of the basis generators under ``b``."""
    if len(basis) != b.strands:
        raise BraidError(f"basis has {len(basis)} generators, braid has {b.strands} strands")
    for g in basis:
        check_generator(g)
    images = {g: Word.gen(g) for g in basis}
    for i, e in b.letters:
        step = _letter_map(i, e, basis)
        images = {g: substitute(w, step) for g, w in images.items()}
    return images


def act(b: Braid, w: Word, basis: Sequence[str]) -> Word:
    images = automorphism(b, basis)
    for g in w.generators():
        if g not in images:
            raise WordError(f"generator {g!r} is outside the basis {list(basis)}")
    return substitute(w, images)


def relations_of(b: Braid, basis: Sequence[str]) -> List[Word]:
    """Relators ``b(e_j) e_j^-1`` for every basis element, empty ones dropped."""
    images = automorphism(b, basis)
    out = []
    for g in basis:
        r = images[g] * Word.gen(g).inverse()
        if r:
            out.append(r)
    return out


def conj_star(w: Word, basis: Sequence[str]) -> Word:
    """Image under the anti-holomorphic involution of the fibre.

    ``e_k -> (e_1...e_{k-1}) e_k^-1 (e_1...e_{k-1})^-1``.
    """
    images = {}
    prefix = IDENTITY
    for g in basis:
        check_generator(g)
        x = Word.gen(g)
        images[g] = prefix * x.inverse() * prefix.inverse()
        prefix = prefix * x
    for g in w.generators():
        if g not in images:
            raise WordError(f"generator {g!r} is outside the basis {list(basis)}")
    return substitute(w, images)


def boundary_word(basis: Sequence[str]) -> Word:
    out = IDENTITY
    for g in basis:
        out = out * Word.gen(g)
    return out


def parse_braid(text: str, strands: int) -> Braid:
    """Parse ``s1 s2^-1 s3^4 FULLTWIST``; powers are expanded."""
    letters: list = []
    for tok in text.split():
        if tok == "FULLTWIST":
            letters.extend(Braid.full_twist(strands).letters)
            continue
        m = _BRAID_TOKEN.match(tok)
        if not m:
            raise BraidError(f"bad braid token {tok!r}")
        i = int(m.group(1))
        p = int(m.group(2)) if m.group(2) is not None else 1
        if p == 0:
            continue
        letters.extend([(i, 1 if p > 0 else -1)] * abs(p))
    return Braid(strands, tuple(letters))


def format_braid(b: Braid) -> str:
    if not b.letters:
        return ""
    out = []
    i = 0
    lets = b.letters
    while i < len(lets):
        j = i
        while j < len(lets) and lets[j] == lets[i]:
            j += 1
        idx, e = lets[i]
        p = (j - i) * e
        out.append(f"s{idx}" if p == 1 else f"s{idx}^{p}")
        i = j
    return " ".join(out)
