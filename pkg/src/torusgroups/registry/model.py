"""Record types for the case registry and their JSON form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .. import notation
from ..word import Word, format_word, substitute

TAGS = ("RB3", "Z6", "ABELIAN", "D4P", "MINIMAL", "OTHER")


class RegistryError(KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


@dataclass(frozen=True)
class RelationGroup:
    """One displayed group of relations, transcribed verbatim.

    ``texts`` use the compact notation of :mod:`torusgroups.notation`.
    """

    label: str
    texts: Tuple[str, ...]

    def relators(self) -> List[Word]:
        out: List[Word] = []
        for t in self.texts:
            out.extend(notation.relators(t))
        return out

    def to_json_obj(self) -> dict:
        return {
            "label": self.label,
            "texts": list(self.texts),
            "relators": [format_word(r) for r in self.relators()],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "RelationGroup":
        return cls(obj["label"], tuple(obj["texts"]))


@dataclass(frozen=True)
class Step:
    """A presentation rewrite applied around the double-cover passage.

    ``kind`` is ``eliminate`` (``gen = word``), ``introduce`` (new ``gen = word``)
    or ``quotient`` (add the relation ``word``).
    """

    kind: str
    gen: str
    word: str

    def to_json_obj(self) -> dict:
        return {"kind": self.kind, "gen": self.gen, "word": self.word}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Step":
        return cls(obj["kind"], obj["gen"], obj["word"])


@dataclass(frozen=True)
class PerturbationRule:
    id: str
    slots: Tuple[str, ...]
    local_relators: Tuple[str, ...]
    description: str
    notes: Tuple[str, ...] = ()

    def instantiate(self, slot_map: Mapping[str, Word], subset: Optional[Sequence[int]] = None) -> List[Word]:
        chosen = range(len(self.local_relators)) if subset is None else subset
        out: List[Word] = []
        for i in chosen:
            template = notation.relators(self.local_relators[i])
            for t in template:
                unbound = t.generators() - set(slot_map)
                if unbound:
                    raise RegistryError(
                        f"rule {self.id!r}: slot(s) {sorted(unbound)} unbound in binding"
                    )
                out.append(substitute(t, slot_map))
        return out

    def to_json_obj(self) -> dict:
        return {
            "id": self.id,
            "slots": list(self.slots),
            "local_relators": list(self.local_relators),
            "description": self.description,
            "notes": list(self.notes),
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "PerturbationRule":
        return cls(obj["id"], tuple(obj["slots"]), tuple(obj["local_relators"]),
                   obj["description"], tuple(obj.get("notes", ())))


@dataclass(frozen=True)
class PerturbationBinding:
    """A rule applied to one case: every slot map instantiates the templates."""

    rule: str
    binding: str
    slot_maps: Tuple[Tuple[Tuple[str, str], ...], ...]
    expected: str
    anchor: str
    subset: Optional[Tuple[int, ...]] = None
    rb3: Tuple[Tuple[str, str], ...] = ()
    result: str = ""
    note: str = ""

    def maps(self) -> List[Dict[str, Word]]:
        return [{k: notation.expand(v) for k, v in m} for m in self.slot_maps]

    def to_json_obj(self) -> dict:
        return {
            "rule": self.rule,
            "binding": self.binding,
            "slot_maps": [dict(m) for m in self.slot_maps],
            "expected": self.expected,
            "anchor": self.anchor,
            "subset": list(self.subset) if self.subset is not None else None,
            "rb3": dict(self.rb3),
            "result": self.result,
            "note": self.note,
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "PerturbationBinding":
        return cls(
            rule=obj["rule"],
            binding=obj["binding"],
            slot_maps=tuple(tuple(sorted(m.items())) for m in obj["slot_maps"]),
            expected=obj["expected"],
            anchor=obj["anchor"],
            subset=tuple(obj["subset"]) if obj.get("subset") is not None else None,
            rb3=tuple(sorted(obj.get("rb3", {}).items())),
            result=obj.get("result", ""),
            note=obj.get("note", ""),
        )


@dataclass(frozen=True)
class Expected:
    tag: str
    anchor: str
    abelianization: Optional[str] = None
    s3_epi: Optional[bool] = None
    rb3: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown tag {self.tag!r}")

    def to_json_obj(self) -> dict:
        return {
            "tag": self.tag,
            "anchor": self.anchor,
            "abelianization": self.abelianization,
            "s3_epi": self.s3_epi,
            "rb3": dict(self.rb3),
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Expected":
        return cls(obj["tag"], obj["anchor"], obj.get("abelianization"), obj.get("s3_epi"),
                   tuple(sorted(obj.get("rb3", {}).items())))


@dataclass(frozen=True)
class CaseRecord:
    id: str
    curve_id: str
    section: Optional[Tuple[str, str, str]]
    section_anchor: str
    generator_ordering: Tuple[str, ...]
    pibar_generators: Tuple[str, ...]
    pibar_relations: Tuple[RelationGroup, ...]
    distinguished_generator: Optional[str]
    pi1_generators: Tuple[str, ...]
    pi1_relations: Tuple[RelationGroup, ...]
    expected: Expected
    pre_steps: Tuple[Step, ...] = ()
    post_steps: Tuple[Step, ...] = ()
    match_mode: str = "relators"
    braids: Tuple[Tuple[str, str], ...] = ()
    perturbations: Tuple[PerturbationBinding, ...] = ()
    metadata: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        # keyed data is kept sorted so that a JSON round trip is the identity
        object.__setattr__(self, "braids", tuple(sorted(self.braids)))
        object.__setattr__(self, "metadata", tuple(sorted(self.metadata)))

    def has_presentations(self) -> bool:
        return bool(self.pi1_relations)

    def binding(self, rule: str, binding: Optional[str] = None) -> PerturbationBinding:
        cands = [b for b in self.perturbations if b.rule == rule]
        if binding is not None:
            cands = [b for b in cands if b.binding == binding]
        if not cands:
            have = [f"{b.rule}:{b.binding}" for b in self.perturbations]
            raise RegistryError(
                f"case {self.id!r} has no binding for rule {rule!r}"
                + (f" / {binding!r}" if binding else "")
                + f"; stored: {have}"
            )
        return cands[0]

    def to_json_obj(self) -> dict:
        return {
            "id": self.id,
            "curve_id": self.curve_id,
            "section": list(self.section) if self.section else None,
            "section_anchor": self.section_anchor,
            "generator_ordering": list(self.generator_ordering),
            "pibar_generators": list(self.pibar_generators),
            "pibar_relations": [g.to_json_obj() for g in self.pibar_relations],
            "distinguished_generator": self.distinguished_generator,
            "pi1_generators": list(self.pi1_generators),
            "pi1_relations": [g.to_json_obj() for g in self.pi1_relations],
            "expected": self.expected.to_json_obj(),
            "pre_steps": [s.to_json_obj() for s in self.pre_steps],
            "post_steps": [s.to_json_obj() for s in self.post_steps],
            "match_mode": self.match_mode,
            "braids": dict(self.braids),
            "perturbations": [b.to_json_obj() for b in self.perturbations],
            "metadata": dict(self.metadata),
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "CaseRecord":
        return cls(
            id=obj["id"],
            curve_id=obj["curve_id"],
            section=tuple(obj["section"]) if obj.get("section") else None,
            section_anchor=obj.get("section_anchor", ""),
            generator_ordering=tuple(obj["generator_ordering"]),
            pibar_generators=tuple(obj["pibar_generators"]),
            pibar_relations=tuple(RelationGroup.from_json_obj(g) for g in obj["pibar_relations"]),
            distinguished_generator=obj.get("distinguished_generator"),
            pi1_generators=tuple(obj["pi1_generators"]),
            pi1_relations=tuple(RelationGroup.from_json_obj(g) for g in obj["pi1_relations"]),
            expected=Expected.from_json_obj(obj["expected"]),
            pre_steps=tuple(Step.from_json_obj(s) for s in obj.get("pre_steps", ())),
            post_steps=tuple(Step.from_json_obj(s) for s in obj.get("post_steps", ())),
            match_mode=obj.get("match_mode", "relators"),
            braids=tuple(sorted(obj.get("braids", {}).items())),
            perturbations=tuple(PerturbationBinding.from_json_obj(b) for b in obj.get("perturbations", ())),
            metadata=tuple(sorted(obj.get("metadata", {}).items())),
        )
