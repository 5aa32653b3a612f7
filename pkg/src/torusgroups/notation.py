"""Compact relation notation used to transcribe the case registry.

Extends the plain word syntax with grouping, integer powers and
commutators::

    (a d)^3 = (d a)^3
    [(a d)^-1 d (a d), b g b^-1]
    (b g)^-1 g (b g) = a

``[x, y]`` expands to ``x y x^-1 y^-1``.  Everything is expanded to plain
:class:`~torusgroups.word.Word` values before it leaves this module.
"""

from __future__ import annotations

import re
from typing import List

from .word import IDENTITY, Word, WordError, commutator

_TOKEN = re.compile(r"\s*(?:(\^-?\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        if m.group(1):
            out.append(("pow", int(m.group(1)[1:])))
        elif m.group(2):
            out.append(("gen", m.group(2)))
        elif m.group(3) and not m.group(3).isspace():
            out.append(("sym", m.group(3)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise WordError(f"unexpected {tok!r} in {self.text!r}")
        self.i += 1
        return tok

    def product(self, stop) -> Word:
        w = IDENTITY
        while True:
            tok = self.peek()
            if tok is None or (tok[0] == "sym" and tok[1] in stop):
                return w
            w = w * self.factor()

    def factor(self) -> Word:
        tok = self.take()
        if tok[0] == "gen":
            base = Word.gen(tok[1])
        elif tok == ("sym", "("):
            base = self.product(")")
            self.take("sym", ")")
        elif tok == ("sym", "["):
            x = self.product(",")
            self.take("sym", ",")
            y = self.product("]")
            self.take("sym", "]")
            base = commutator(x, y)
        elif tok == ("sym", "1"):
            base = IDENTITY
        else:
            raise WordError(f"unexpected {tok!r} in {self.text!r}")
        nxt = self.peek()
        if nxt and nxt[0] == "pow":
            self.i += 1
            base = base ** nxt[1]
        return base


def expand(text: str) -> Word:
    p = _Parser(text)
    w = p.product(())
    if p.peek() is not None:
        raise WordError(f"trailing input in {text!r}")
    return w


def relators(text: str) -> List[Word]:
    """Relators of ``lhs = mid = rhs`` (consecutive links) or a bare relator."""
    depth = 0
    parts, cur = [], []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "=" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    sides = [expand(s) for s in parts]
    if len(sides) == 1:
        return [sides[0]]
    return [sides[i] * sides[i + 1].inverse() for i in range(len(sides) - 1)]
