"""Registry of transcribed cases, perturbation rules and auxiliary groups.

The registry is immutable.  :func:`export_json` gives a byte-stable JSON
document and :func:`import_json` reads one back.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .. import notation
from ..presentation import (
    Presentation,
    PresentationError,
    double_cover,
    eliminate_generator,
    introduce_generator,
    matches_relators,
    normalize,
    quotient_add_relators,
)
from ..word import Word
from .data import CASES, NAMED_PRESENTATIONS, REGISTRY_VERSION, RULES
from .model import (
    TAGS,
    CaseRecord,
    Expected,
    PerturbationBinding,
    PerturbationRule,
    RegistryError,
    RelationGroup,
    Step,
)

_CASES: Dict[str, CaseRecord] = {c.id: c for c in CASES}
_RULES: Dict[str, PerturbationRule] = {r.id: r for r in RULES}
# ASCII spellings of rule ids
_RULE_ALIASES = {r.replace("→", "->"): r for r in _RULES}


def list_cases() -> List[str]:
    return [c.id for c in CASES]


def get_case(case_id: str) -> CaseRecord:
    try:
        return _CASES[case_id]
    except KeyError:
        raise RegistryError(
            f"unknown case {case_id!r}; valid ids: {', '.join(list_cases())}"
        ) from None


def list_rules() -> List[str]:
    return [r.id for r in RULES]


def get_rule(rule_id: str) -> PerturbationRule:
    rid = _RULE_ALIASES.get(rule_id, rule_id)
    try:
        return _RULES[rid]
    except KeyError:
        raise RegistryError(
            f"unknown rule {rule_id!r}; valid ids: {', '.join(list_rules())}"
        ) from None


def named_presentation(name: str) -> Presentation:
    try:
        gens, rels = NAMED_PRESENTATIONS[name]
    except KeyError:
        raise RegistryError(
            f"unknown presentation {name!r}; valid: {', '.join(sorted(NAMED_PRESENTATIONS))}"
        ) from None
    return _build(gens, [RelationGroup(name, rels)])


def _build(gens: Sequence[str], groups: Sequence[RelationGroup]) -> Presentation:
    rels: List[Word] = []
    labels: List[str] = []
    for g in groups:
        for r in g.relators():
            rels.append(r)
            labels.append(g.label)
    return Presentation(tuple(gens), tuple(rels), tuple(labels))


def _case(case) -> CaseRecord:
    return case if isinstance(case, CaseRecord) else get_case(case)


def pibar_presentation(case) -> Presentation:
    c = _case(case)
    if not c.pibar_relations:
        raise RegistryError(f"case {c.id!r} stores no presentation")
    return _build(c.pibar_generators, c.pibar_relations)


def pi1_presentation(case) -> Presentation:
    c = _case(case)
    if not c.pi1_relations:
        raise RegistryError(f"case {c.id!r} stores no presentation")
    return _build(c.pi1_generators, c.pi1_relations)


def apply_step(p: Presentation, step: Step) -> Presentation:
    if step.kind == "eliminate":
        return eliminate_generator(p, step.gen, notation.expand(step.word))
    if step.kind == "introduce":
        return introduce_generator(p, step.gen, notation.expand(step.word))
    if step.kind == "quotient":
        return quotient_add_relators(p, notation.relators(step.word), label=step.gen)
    raise PresentationError(f"unknown step kind {step.kind!r}")


def reconstruct_pi1(case) -> Presentation:
    """Pre-steps, double cover over the distinguished generator, post-steps."""
    c = _case(case)
    p = pibar_presentation(c)
    for s in c.pre_steps:
        p = apply_step(p, s)
    p = double_cover(p, c.distinguished_generator)
    for s in c.post_steps:
        p = apply_step(p, s)
    return normalize(p)


@dataclass(frozen=True)
class RelatorMatch:
    """Result of pairing printed relators with reconstructed ones."""

    case: str
    missing: Tuple[Word, ...]
    extra: Tuple[Word, ...]

    @property
    def exact(self) -> bool:
        return not self.missing and not self.extra


def match_pi1(case) -> RelatorMatch:
    c = _case(case)
    computed = reconstruct_pi1(c)
    printed = pi1_presentation(c)
    if set(computed.generators) != set(printed.generators):
        raise RegistryError(
            f"case {c.id!r}: generators {computed.generators} vs printed {printed.generators}"
        )
    missing, extra = matches_relators(computed, printed.relators)
    return RelatorMatch(c.id, tuple(missing), tuple(extra))


def perturbation_relators(case, rule_id: str, binding: Optional[str] = None) -> List[Word]:
    c = _case(case)
    rule = get_rule(rule_id)
    b = c.binding(rule.id, binding)
    out: List[Word] = []
    for m in b.maps():
        out.extend(rule.instantiate(m, b.subset))
    return out


def apply_perturbation(case, rule_id: str, binding: Optional[str] = None) -> Presentation:
    """The case's printed group modulo the rule's local relators under ``binding``."""
    c = _case(case)
    rule = get_rule(rule_id)
    c.binding(rule.id, binding)
    extra = perturbation_relators(c, rule.id, binding)
    return quotient_add_relators(pi1_presentation(c), extra, label=f"perturbation {rule.id}")


# --- JSON -------------------------------------------------------------------


def registry_json_obj(cases: Sequence[CaseRecord] = CASES,
                      rules: Sequence[PerturbationRule] = RULES) -> dict:
    return {
        "version": REGISTRY_VERSION,
        "cases": [c.to_json_obj() for c in cases],
        "rules": [r.to_json_obj() for r in rules],
    }


def export_json(cases: Sequence[CaseRecord] = CASES,
                rules: Sequence[PerturbationRule] = RULES) -> str:
    obj = registry_json_obj(cases, rules)
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def import_json(text: str) -> Tuple[Tuple[CaseRecord, ...], Tuple[PerturbationRule, ...]]:
    obj = json.loads(text)
    cases = tuple(CaseRecord.from_json_obj(c) for c in obj["cases"])
    rules = tuple(PerturbationRule.from_json_obj(r) for r in obj["rules"])
    return cases, rules


__all__ = [
    "TAGS", "CaseRecord", "Expected", "PerturbationBinding", "PerturbationRule",
    "RegistryError", "RelationGroup", "Step", "RelatorMatch",
    "list_cases", "get_case", "list_rules", "get_rule", "named_presentation",
    "pibar_presentation", "pi1_presentation", "apply_step", "reconstruct_pi1",
    "match_pi1", "perturbation_relators", "apply_perturbation",
    "registry_json_obj", "export_json", "import_json",
]
