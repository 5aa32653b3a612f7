"""Freely reduced words in a free group on named generators.

A word is an immutable tuple of letters ``(name, sign)`` with ``sign`` in
``{+1, -1}``.  The textual syntax is a whitespace separated list of
generator names, each optionally followed by ``^-1``::

    >>> parse_word("a b^-1 b c")
    Word('a c')
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence, Tuple

Letter = Tuple[str, int]

GENERATOR_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_TOKEN_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(\^-1)?\Z")


class WordError(ValueError):
    """Raised for malformed words or unmapped generators."""


def check_generator(name: str) -> str:
    if not isinstance(name, str) or not GENERATOR_RE.match(name):
        raise WordError(f"invalid generator name {name!r}")
    return name


def _free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: list = []
    for g, e in letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


class Word:
    """Freely reduced word; equality and hashing are on the letter tuple."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        raw = []
        for g, e in letters:
            if e not in (1, -1):
                raise WordError(f"exponent must be +1 or -1, got {e!r}")
            raw.append((g, e))
        object.__setattr__(self, "letters", _free_reduce(raw))

    def __setattr__(self, key, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def _trusted(cls, letters: Tuple[Letter, ...]) -> "Word":
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def gen(cls, name: str, sign: int = 1) -> "Word":
        return cls([(check_generator(name), sign)])

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word._trusted(_free_reduce(self.letters + other.letters))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Word()
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "Word":
        return Word._trusted(tuple((g, -e) for g, e in reversed(self.letters)))

    def generators(self) -> frozenset:
        return frozenset(g for g, _ in self.letters)

    def exponent_sum(self, name: str) -> int:
        return sum(e for g, e in self.letters if g == name)

    def cyclically_reduced(self) -> "Word":
        lets = self.letters
        i, j = 0, len(lets)
        while j - i >= 2 and lets[i][0] == lets[j - 1][0] and lets[i][1] == -lets[j - 1][1]:
            i += 1
            j -= 1
        return Word._trusted(lets[i:j])

    def rotations(self):
        lets = self.letters
        for k in range(len(lets)):
            yield Word._trusted(lets[k:] + lets[:k])

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


IDENTITY = Word()


def reduce(raw: Iterable[Letter]) -> Word:
    """Return the freely reduced word for a raw sequence of signed letters."""
    return Word(raw)


def commutator(x: Word, y: Word) -> Word:
    """``x y x^-1 y^-1``."""
    return x * y * x.inverse() * y.inverse()


def substitute(w: Word, assignment: Mapping[str, Word]) -> Word:
    """Apply the homomorphism given on generators by ``assignment``."""
    out: list = []
    for g, e in w.letters:
        try:
            image = assignment[g]
        except KeyError:
            raise WordError(f"generator {g!r} is not in the assignment's domain") from None
        out.extend(image.letters if e == 1 else image.inverse().letters)
    return Word(out)


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text or text == "1":
        return IDENTITY
    letters = []
    for tok in text.split():
        m = _TOKEN_RE.match(tok)
        if not m:
            raise WordError(f"bad token {tok!r} in word {text!r}")
        letters.append((m.group(1), -1 if m.group(2) else 1))
    return Word(letters)


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    return " ".join(g if e == 1 else f"{g}^-1" for g, e in w.letters)


def parse_relation(text: str) -> Word:
    """Parse ``w1 = w2 = ...`` (or a bare relator) into a single relator.

    Chains contribute ``w1 w2^-1`` only; use :func:`parse_relations` to get
    every link of a chain.
    """
    rels = parse_relations(text)
    if len(rels) != 1:
        raise WordError(f"expected a single relation, got {len(rels)} in {text!r}")
    return rels[0]


def parse_relations(text: str) -> list:
    sides = [parse_word(s) for s in text.split("=")]
    if len(sides) == 1:
        return [sides[0]]
    return [sides[i] * sides[i + 1].inverse() for i in range(len(sides) - 1)]


def words_over(letters: Sequence[str], w: Word) -> bool:
    return w.generators() <= set(letters)
