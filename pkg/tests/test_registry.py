import json
from fractions import Fraction as F

import pytest

from torusgroups import curvegeom as cg
from torusgroups import registry
from torusgroups.notation import relators
from torusgroups.presentation import canonical_relator
from torusgroups.curvegeom.curves import CURVES
from torusgroups.registry import RegistryError

ALL = registry.list_cases()
WITH_PRESENTATION = [c for c in ALL if registry.get_case(c).has_presentations()]


def keys(words):
    return sorted(canonical_relator(w) for w in words)


def test_fourteen_cases_ten_rules():
    assert len(ALL) == 14 and len(set(ALL)) == 14
    assert len(registry.list_rules()) == 10


def test_unknown_case_lists_valid_ids():
    with pytest.raises(RegistryError) as exc:
        registry.get_case("a99")
    assert "a17+a2" in str(exc.value) and "3d5+a3" in str(exc.value)


def test_rule_ascii_alias():
    assert registry.get_rule("A11->A10") is registry.get_rule("A11→A10")
    with pytest.raises(RegistryError):
        registry.get_rule("A1->A0")


def test_case_without_presentation():
    c = registry.get_case("2e7+a2+3a1")
    assert not c.has_presentations()
    with pytest.raises(RegistryError):
        registry.pi1_presentation(c)


@pytest.mark.parametrize("cid", WITH_PRESENTATION)
def test_generators_declared(cid):
    # Presentation() rejects undeclared generators, so building is the check
    c = registry.get_case(cid)
    p, q = registry.pibar_presentation(c), registry.pi1_presentation(c)
    for step in c.pre_steps:
        p = registry.apply_step(p, step)
    assert c.distinguished_generator in p.generators
    assert set(q.generators) == set(registry.reconstruct_pi1(c).generators)


@pytest.mark.parametrize("cid", [c for c in WITH_PRESENTATION
                                 if registry.get_case(c).match_mode == "relators"])
def test_relator_mode_cases_match_exactly(cid):
    m = registry.match_pi1(cid)
    assert m.exact, (m.missing, m.extra)


def test_a11_3a2_a8_perturbation_adds_braid_relation():
    got = registry.perturbation_relators("a11+3a2", "A11->A8+A2")
    assert keys(got) == keys(relators("a b a = b a b"))
    p = registry.apply_perturbation("a11+3a2", "A11→A8+A2")
    base = registry.pi1_presentation("a11+3a2")
    assert len(p.relators) == len(base.relators) + 1


def test_d5_chain_binding():
    got = registry.perturbation_relators("2a5+2a2+d5", "D5->A4")
    assert keys(got) == keys(relators("b = bb = d = db"))


def test_d4_local_abelianization():
    got = registry.perturbation_relators("a11+2a2+d4", "D4->abelianize-local")
    want = []
    gens = ["b", "bb", "g", "gb"]
    for i, x in enumerate(gens):
        for y in gens[i + 1:]:
            want += relators(f"[{x}, {y}]")
    assert keys(got) == keys(want)


def test_missing_binding():
    with pytest.raises(RegistryError):
        registry.apply_perturbation("a17+a2", "A11→A10")
    with pytest.raises(RegistryError):
        registry.apply_perturbation("a11+3a2", "A11→A10", "nope")


def test_export_is_byte_stable_and_round_trips():
    a, b = registry.export_json(), registry.export_json()
    assert a == b and a.endswith("\n")
    cases, rules = registry.import_json(a)
    assert cases == registry.CASES and rules == registry.RULES
    assert registry.export_json(cases, rules) == a
    obj = json.loads(a)
    assert obj["version"] == registry.REGISTRY_VERSION


def test_named_presentations():
    assert str(registry.named_presentation("rb3").generators) == "('u', 'v')"
    with pytest.raises(RegistryError):
        registry.named_presentation("nope")


def _section(c):
    field = cg.CBRT4_FIELD if any("/" in s and "x^3" in s for s in c.section) else cg.QQ
    vals = [cg.parse_element(s) if "x^3" in s else field(F(s)) for s in c.section]
    return cg.SectionCoeffs.of(*vals)


@pytest.mark.parametrize("cid", [c for c in ALL if registry.get_case(c).curve_id in CURVES])
def test_sections_are_not_components(cid):
    c = registry.get_case(cid)
    g = cg.restrict_to_section(CURVES[c.curve_id](), _section(c))
    assert not g.is_zero()


def test_sections_agree_with_families():
    a17 = registry.get_case("a17+a2")
    r = cg.verify_family("inflection", {"t": F(1, 2)})
    assert r.section == _section(a17)
    r = cg.verify_family("b2-inflection", {"t": F(-1, 6)})
    assert r.section == _section(registry.get_case("a11+3a2"))
