"""Finitely presented groups: normalization, quotients, Tietze moves and the
index-2 Reidemeister-Schreier passage used for double coverings.

File format::

    # comment
    gens: a ab b bb g gb
    g b g = b g a
    a ab a = ab a ab

Each non-comment line after the ``gens:`` header is one relator or one
equation (``=`` chains allowed) in the compact notation: powers ``x^3``,
parentheses and commutators ``[x, y]``.  :func:`parse_presentation` keeps the raw
lines so that :func:`format_presentation` round-trips byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .word import (
    IDENTITY,
    Word,
    WordError,
    check_generator,
    format_word,
    substitute,
)
from .notation import relators as parse_relations


class PresentationError(ValueError):
    pass


def canonical_relator(w: Word) -> Tuple:
    """Key identifying a relator up to cyclic rotation and inversion."""
    w = w.cyclically_reduced()
    if not w:
        return ()
    cands = [r.letters for r in w.rotations()]
    cands += [r.letters for r in w.inverse().rotations()]
    return min(cands)


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[str, ...]
    relators: Tuple[Word, ...] = ()
    labels: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise PresentationError(f"duplicate generators in {gens}")
        for g in gens:
            check_generator(g)
        rels = tuple(self.relators)
        known = set(gens)
        for r in rels:
            bad = r.generators() - known
            if bad:
                raise PresentationError(
                    f"relator {format_word(r)!r} uses unknown generator(s) {sorted(bad)}"
                )
        labels = tuple(self.labels)
        if labels and len(labels) != len(rels):
            raise PresentationError("labels must match relators one-to-one")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_strings(cls, gens, relations: Iterable[str]) -> "Presentation":
        if isinstance(gens, str):
            gens = gens.split()
        rels: list = []
        for text in relations:
            rels.extend(parse_relations(text))
        return cls(tuple(gens), tuple(rels))

    def label_of(self, i: int) -> str:
        return self.labels[i] if self.labels else ""

    def __str__(self) -> str:
        rels = ", ".join(format_word(r) for r in self.relators)
        return f"< {' '.join(self.generators)} | {rels} >"


def normalize(p: Presentation) -> Presentation:
    """Cyclically reduce, drop trivial relators and duplicates up to rotation/inversion."""
    seen = set()
    rels, labels = [], []
    for i, r in enumerate(p.relators):
        c = r.cyclically_reduced()
        if not c:
            continue
        key = canonical_relator(c)
        if key in seen:
            continue
        seen.add(key)
        rels.append(c)
        labels.append(p.label_of(i))
    return Presentation(p.generators, tuple(rels), tuple(labels) if p.labels else ())


def _as_relators(extra) -> List[Word]:
    out: list = []
    for item in extra:
        if isinstance(item, Word):
            out.append(item)
        elif isinstance(item, str):
            out.extend(parse_relations(item))
        elif isinstance(item, tuple) and len(item) == 2:
            out.append(item[0] * item[1].inverse())
        else:
            raise PresentationError(f"cannot interpret {item!r} as a relation")
    return out


def quotient_add_relators(p: Presentation, extra, label: str = "") -> Presentation:
    """Quotient of ``p`` by extra relators, equations or ``(lhs, rhs)`` pairs."""
    new = _as_relators(extra)
    labels = ()
    if p.labels or label:
        labels = tuple(p.label_of(i) for i in range(len(p.relators))) + (label,) * len(new)
    return normalize(Presentation(p.generators, p.relators + tuple(new), labels))


def default_bar(name: str) -> str:
    return name + "b"


def schreier_rewrite(r: Word, d: str, start: int, bar: Callable[[str], str]) -> Word:
    """Rewrite ``r`` read from coset ``start`` (0 or 1) with transversal ``{1, d}``.

    Generator ``x != d`` read at coset 0 is ``x``, at coset 1 it is ``bar(x)``;
    ``d`` moves between cosets and contributes ``d^2 = 1`` or nothing.
    """
    coset = start
    out = []
    for g, e in r.letters:
        if g == d:
            coset ^= 1
            continue
        out.append((g if coset == 0 else bar(g), e))
    if coset != start:
        raise PresentationError(
            f"relator {format_word(r)!r} has odd exponent sum in {d!r}; not in the kernel"
        )
    return Word(out)


def double_cover_raw(p: Presentation, d: str, bar: Callable[[str], str] = default_bar) -> Presentation:
    """Kernel of ``p/<<d^2>> -> Z_2`` before normalization: two rewrites per relator."""
    if d not in p.generators:
        raise PresentationError(f"{d!r} is not a generator of the presentation")
    others = [g for g in p.generators if g != d]
    gens = []
    for g in others:
        gens += [g, bar(g)]
    rels, labels = [], []
    for i, r in enumerate(p.relators):
        lab = p.label_of(i)
        rels.append(schreier_rewrite(r, d, 0, bar))
        labels.append(lab)
        rels.append(schreier_rewrite(r, d, 1, bar))
        labels.append(lab + "~" if lab else "")
    return Presentation(tuple(gens), tuple(rels), tuple(labels) if p.labels else ())


def double_cover(p: Presentation, d: str, bar: Callable[[str], str] = default_bar) -> Presentation:
    return normalize(double_cover_raw(p, d, bar))


def eliminate_generator(p: Presentation, g: str, defining: Word) -> Presentation:
    """Tietze elimination of ``g = defining``.

    The defining relator is added if absent, every relator is rewritten by
    substitution, and the (now trivial) definition disappears.
    """
    if g not in p.generators:
        raise PresentationError(f"{g!r} is not a generator")
    if g in defining.generators():
        raise PresentationError(f"defining word for {g!r} mentions {g!r}")
    bad = defining.generators() - set(p.generators)
    if bad:
        raise PresentationError(f"defining word uses unknown generator(s) {sorted(bad)}")
    assignment = {x: Word.gen(x) for x in p.generators}
    assignment[g] = defining
    gens = tuple(x for x in p.generators if x != g)
    rels = tuple(substitute(r, assignment) for r in p.relators)
    labels = p.labels
    return normalize(Presentation(gens, rels, labels))


def introduce_generator(p: Presentation, g: str, defining: Word) -> Presentation:
    """Tietze move adding a new generator ``g`` with relator ``g defining^-1``."""
    if g in p.generators:
        raise PresentationError(f"{g!r} is already a generator")
    check_generator(g)
    bad = defining.generators() - set(p.generators)
    if bad:
        raise PresentationError(f"defining word uses unknown generator(s) {sorted(bad)}")
    rel = Word.gen(g) * defining.inverse()
    labels = p.labels + ("def " + g,) if p.labels else ()
    return Presentation(p.generators + (g,), p.relators + (rel,), labels)


def rename_generators(p: Presentation, mapping) -> Presentation:
    gens = tuple(mapping.get(g, g) for g in p.generators)
    assignment = {g: Word.gen(mapping.get(g, g)) for g in p.generators}
    rels = tuple(substitute(r, assignment) for r in p.relators)
    return Presentation(gens, rels, p.labels)


def matches_relators(computed: Presentation, printed: Sequence[Word]):
    """Pair printed relators with computed ones up to rotation and inversion.

    Returns ``(unmatched_printed, unmatched_computed)`` as lists of words.
    """
    ckeys = {canonical_relator(r): r for r in computed.relators if r.cyclically_reduced()}
    pkeys = {}
    for r in printed:
        if r.cyclically_reduced():
            pkeys.setdefault(canonical_relator(r), r)
    missing = [r for k, r in pkeys.items() if k not in ckeys]
    extra = [r for k, r in ckeys.items() if k not in pkeys]
    return missing, extra


# --- file format -----------------------------------------------------------


@dataclass(frozen=True)
class PresentationFile:
    """A parsed presentation file together with its raw text lines."""

    presentation: Presentation
    lines: Tuple[str, ...]


def parse_presentation(text: str) -> PresentationFile:
    lines = text.split("\n")
    gens: Optional[Tuple[str, ...]] = None
    rels: list = []
    labels: list = []
    for n, line in enumerate(lines, 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if gens is None:
            if not body.startswith("gens:"):
                raise PresentationError(f"line {n}: expected 'gens:' header")
            gens = tuple(body[len("gens:"):].split())
            continue
        try:
            for r in parse_relations(body):
                rels.append(r)
                labels.append(f"line {n}")
        except WordError as exc:
            raise PresentationError(f"line {n}: {exc}") from None
    if gens is None:
        raise PresentationError("missing 'gens:' header")
    return PresentationFile(Presentation(gens, tuple(rels), tuple(labels)), tuple(lines))


def format_presentation(obj) -> str:
    """Serialize; a :class:`PresentationFile` is reproduced verbatim."""
    if isinstance(obj, PresentationFile):
        return "\n".join(obj.lines)
    p = obj
    out = ["gens: " + " ".join(p.generators)]
    out += [format_word(r) for r in p.relators]
    return "\n".join(out) + "\n"


def load_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read()).presentation
