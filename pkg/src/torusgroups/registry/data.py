"""Transcribed case data.

Relations are stored exactly as displayed, in the compact notation
(``(x y)^3``, ``[x, y]``, chains ``u = v = w``).  Generator names:
``a b g d`` for the four fibre generators and a trailing ``b`` for the
conjugate under the deck involution (``ab``, ``gb``, ...).
"""

from __future__ import annotations

from typing import Dict, Tuple

from .model import (
    CaseRecord,
    Expected,
    PerturbationBinding,
    PerturbationRule,
    RelationGroup,
    Step,
)

REGISTRY_VERSION = "1"

R = RelationGroup


def _chain(*words: str) -> Tuple[Tuple[Tuple[str, str], ...], ...]:
    """Slot maps ``g1 = w_i, g2 = w_{i+1}`` for an equality chain."""
    return tuple(
        (("g1", words[i]), ("g2", words[i + 1])) for i in range(len(words) - 1)
    )


def _pair(x: str, y: str):
    return ((("g1", x), ("g2", y)),)


def _rb3(s1: str, s2: str):
    return tuple(sorted([(g, "s1") for g in s1.split()] + [(g, "s2") for g in s2.split()]))


# --- perturbation rules -----------------------------------------------------

RULES: Tuple[PerturbationRule, ...] = (
    PerturbationRule(
        "A11→A8+A2", ("g1", "g2"), ("g1 g2 g1 = g2 g1 g2",),
        "torus-type maximal perturbation of A11; local group B3",
    ),
    PerturbationRule(
        "A11→A10", ("g1", "g2"), ("g1 = g2",),
        "non-torus maximal perturbation of A11 (also A6+A4); local group cyclic",
    ),
    PerturbationRule(
        "A5→A4", ("g1", "g2"), ("g1 = g2",),
        "non-torus maximal perturbation of A5; local group cyclic",
    ),
    PerturbationRule(
        "A7→A6", ("g1", "g2"), ("g1 = g2",),
        "maximal perturbation of A7 (also A4+A2); local group cyclic",
    ),
    PerturbationRule(
        "A3→A2", ("g1", "g2"), ("g1 = g2",),
        "maximal irreducible perturbation of A3; local group cyclic",
    ),
    PerturbationRule(
        "D5→A4", ("g1", "g2"), ("g1 = g2",),
        "the only maximal irreducible perturbation of D5; local group cyclic",
    ),
    PerturbationRule(
        "D4→abelianize-local", ("g1", "g2", "g3", "g4"),
        ("[g1, g2]", "[g1, g3]", "[g1, g4]", "[g2, g3]", "[g2, g4]", "[g3, g4]"),
        "any nontrivial perturbation of D4 has abelian local group",
    ),
    PerturbationRule(
        "D4→A3-conic", ("g1", "g2"), ("g1 = g2",),
        "D4 to a conic and a tangent line; two local generators become equal",
        notes=(
            "the kept line is chosen by a subdiagram A3 of D4; only the binding "
            "used in the computation is stored, other choices are not evaluated",
        ),
    ),
    PerturbationRule(
        "node", ("g1", "g2"), ("g1 = g2",),
        "smoothing a node identifies its two local generators",
    ),
    PerturbationRule(
        "E7→A4+A2", ("g1", "g2", "g3"),
        ("g1 g2 g1 = g2 g1 g2", "g1 g3 g1 = g3 g1 g2", "g3 g1 g3 = g2 g3 g1"),
        "relations of the A4+A2 perturbation of E7 in standard fibre generators",
        notes=(
            "local group of the A4+A2 perturbation is Z x SL(2,F5); recorded, not verified",
            "perturbations to E6 and A6 have cyclic local groups",
        ),
    ),
)

# --- shared relation sets ---------------------------------------------------

# trigonal curve B2 with section (27, -9/2, -1/16); basis (a, b, d, g)
PIBAR_A11_3A2 = (
    R("fibre through R5", ("d (a b)^3 = (b a b) d (a b a)", "[d, a b]")),
    R("fibre through R1", ("[(b a b d)^-1 a (b a b d), g]",)),
    R("fibre through Q5", ("(g d)^3 = (d g)^3",)),
    R("vertical tangent", ("b = (d g d) g (d g d)^-1",)),
    R("fibre through Q1", ("[b^-1 a b, (d g) d (d g)^-1]",)),
    R("relation at infinity", ("(a b d g)^2",)),
)

PIBAR_A11_2A2_D4 = (
    R("fibre through R5", ("d (a b)^3 = (b a b) d (a b a)", "[d, a b]")),
    R("fibre through R1", ("b (d g)^2 = g b d g d", "[b, d g]")),
    R("vertical tangent", ("(b a b d)^-1 a (b a b d) = g",)),
    R("fibre through Q1", ("[a, g^-1 d g]",)),
    R("relation at infinity", ("(a b d g)^2",)),
)

# presentation obtained after making d central and eliminating g
PIBAR_2E7 = (
    R("R5 braid", ("(a b)^3 = (b a)^3",)),
    R("d central", ("[a, d]", "[b, d]")),
    R("relation at infinity", ("(a b a)^2 d^2",)),
)

PIBAR_2A5_E6_A3 = (
    R("fibre through R5", ("(a b)^3 = (b a)^3",)),
    R("vertical tangent", ("(a b) a (a b)^-1 = g",)),
    R("fibre through Q1", ("[d, a b a^-1]",)),
    R("fibre through R1", ("[g d, b]", "[b g d, g]", "[b g, d]")),
    R("relation at infinity", ("(a b g d)^2",)),
)

PIBAR_3A5_D4 = (
    PIBAR_2A5_E6_A3[0],
    PIBAR_2A5_E6_A3[1],
    PIBAR_2A5_E6_A3[2],
    R("fibre through R1", ("[b, g d]", "d b g d g = b g d g d")),
    PIBAR_2A5_E6_A3[4],
)

PIBAR_A11_A5_A3 = (
    R("fibre through R1", ("[b, d g]", "[d, g b]", "[g, b d]")),
    R("fibre through R5", ("[d, a b]", "d (a b)^3 = b a b d a b a")),
    R("vertical tangent", ("(b a b d)^-1 a (b a b d) = g",)),
    R("relation at infinity", ("(a b d g)^2",)),
)

D4_PERTURBED = (
    R("braid cube", ("(a b)^3 = (b a)^3",)),
    R("square", ("(a b a)^2",)),
)

MINIMAL = (
    R("braid", ("a ab a = ab a ab",)),
    R("central d", ("[a, d]", "[ab, d]")),
    R("product", ("a^2 ab^2 d^2 = 1",)),
)

PI1_6_COMMON = (
    R("R5 braid cube", ("(a b)^3 = (b a)^3", "(ab bb)^3 = (bb ab)^3")),
    R("vertical tangent", ("(a b) a (a b)^-1 = g", "(ab bb) ab (ab bb)^-1 = gb")),
    R("fibre through Q1", ("a b a^-1 = ab bb ab^-1",)),
)
PI1_6_INF = R("relation at infinity", ("a b g ab bb gb = 1",))

PI1_9_COMMON = (
    R("braid", ("a ab a = ab a ab",)),
    R("vertical tangent", ("a ab a^-1 = g", "ab a ab^-1 = gb")),
    R("fibre through Q1", ("a^-1 d a = ab^-1 db ab",)),
)
PI1_9_INF = R("relation at infinity", ("g d a gb db ab = 1",))

TORUS_ANCHOR = "explicit generator map onto the reduced braid group"
ABELIAN_ANCHOR = "perturbation forces commuting generators; group abelian"

# --- cases ------------------------------------------------------------------

CASES: Tuple[CaseRecord, ...] = (
    CaseRecord(
        id="a17+a2",
        curve_id="B1",
        section=("-8", "16/3", "0"),
        section_anchor="inflection tangent through the cusp, real root eps = 1",
        generator_ordering=("a", "d", "b", "g"),
        pibar_generators=("a", "b", "g", "d"),
        pibar_relations=(
            R("vertical tangent through P+", ("(b g)^-1 g (b g) = a",)),
            R("vertical tangent through P-", ("(d b g b) g (d b g b)^-1 = a",)),
            R("inflection tangency", ("(a d)^3 = (d a)^3",)),
            R("vertical tangent through P1", ("(d a d)^-1 a (d a d) = b",)),
            R("transversal intersection", ("[(a d)^-1 d (a d), b g b^-1]",)),
            R("relation at infinity", ("(a d b g)^2",)),
        ),
        distinguished_generator="d",
        pi1_generators=("a", "ab", "b", "bb", "g", "gb"),
        pi1_relations=(
            R("vertical tangents P+", ("g b g = b g a", "gb bb gb = bb gb ab")),
            R("vertical tangents P-", ("b g b g = ab b g b", "bb gb bb gb = a bb gb bb")),
            R("inflection tangency", ("a ab a = ab a ab",)),
            R("vertical tangent P1", ("ab^-1 a ab = b", "a^-1 ab a = bb")),
            R("transversal intersection", ("(a bb) gb (a bb)^-1 = (ab b) g (ab b)^-1",)),
            R("relation at infinity", ("a bb gb ab b g = 1",)),
        ),
        expected=Expected("RB3", TORUS_ANCHOR, "Z6", True, _rb3("a ab b bb", "g gb")),
        braids=(("m+", "s3^3 s2 s1 s2^-1 s3^-3"),),
        metadata=(
            ("ignored braid relation", "monodromy about the cusp P0 (implied by the others)"),
            ("singularities", "(A17) + A2"),
        ),
    ),
    CaseRecord(
        id="2a8+a3",
        curve_id="B1",
        section=("[0,-28/27,0]/x^3+4", "[0,0,16/81]/x^3+4", "256/243"),
        section_anchor="quadruple contact section, delta = theta/2 with theta^3 = -4",
        generator_ordering=("d", "a", "b", "g"),
        pibar_generators=("d", "a", "b", "g"),
        pibar_relations=(
            R("vertical tangent through P+", ("(b g)^-1 g (b g) = (d a)^-1 a (d a)",)),
            R("vertical tangent through P-", ("(b g b) g (b g b)^-1 = d a d^-1",)),
            R("vertical tangent through P0", ("a = b",)),
            R("quadruple intersection", ("(a d)^4 = (d a)^4",)),
            R("relation at infinity", ("(d a b g)^2",)),
            R("transversal intersection Q+", ("[a^-1 d a, g^-1 b g]",)),
            R("transversal intersection Q-", ("[b^-1 d b, g b g^-1]",)),
        ),
        distinguished_generator="d1",
        pre_steps=(
            Step("eliminate", "a", "b"),
            Step("introduce", "d1", "b^-1 d b"),
            Step("eliminate", "d", "b d1 b^-1"),
        ),
        pi1_generators=("b", "bb", "g", "gb"),
        pi1_relations=(
            R("group 1", ("g b g = b g bb", "gb bb gb = bb gb b")),
            R("group 2", ("g b g = bb g b", "gb bb gb = b gb bb")),
            R("group 3", ("(b bb)^2 = (bb b)^2",)),
            R("group 4", ("g bb gb = b g b", "gb b g = bb gb bb")),
            R("group 5", ("gb bb g = b g b", "g b gb = bb gb bb")),
            R("group 6", ("b g b bb gb bb = 1",)),
        ),
        match_mode="spectra",
        expected=Expected("RB3", TORUS_ANCHOR, "Z6", True, _rb3("b bb", "g gb")),
        braids=(
            ("m+", "s3^3 s1^2 s2 s1^-2 s3^-3"),
            ("m", "s2^-1 s3^-1 s2 FULLTWIST s1^-4 s3^-4"),
        ),
        metadata=(
            ("Q+ relation", "d a g^-1 b g a^-1 d a g^-1 b g a^-1 d^-1 = d"),
            ("n+", "m m+^-1; its action on d gives the Q+ relation"),
            ("Q-", "image of the Q+ relation under conj_star"),
            ("singularities", "(2A8) + A3"),
        ),
    ),
    CaseRecord(
        id="a11+3a2",
        curve_id="B2",
        section=("27", "-9/2", "-1/16"),
        section_anchor="inflection tangent to x = y^2 and through R5",
        generator_ordering=("a", "b", "d", "g"),
        pibar_generators=("a", "b", "d", "g"),
        pibar_relations=PIBAR_A11_3A2,
        distinguished_generator="d",
        pi1_generators=("a", "ab", "b", "bb", "g", "gb"),
        pi1_relations=(
            R("R5 pair", ("(a b)^3 = bb ab bb a b a", "(ab bb)^3 = b a b ab bb ab")),
            R("R5 commutation", ("a b = ab bb",)),
            R("R1", ("[(b a b)^-1 a (b a b), gb]", "[(bb ab bb)^-1 ab (bb ab bb), g]")),
            R("Q5", ("g gb g = gb g gb",)),
            R("vertical tangent", ("b = gb g gb^-1", "bb = g gb g^-1")),
            R("Q1", ("(bb g)^-1 ab bb g = (b gb)^-1 a b gb",)),
            R("relation at infinity", ("a b gb ab bb g = 1",)),
        ),
        expected=Expected("OTHER", "reducible: three cuspidal quartic and conic"),
        perturbations=(
            PerturbationBinding(
                "A11→A8+A2", "a,b", _pair("a", "b"), "RB3", TORUS_ANCHOR,
                rb3=_rb3("a ab", "b bb g gb"),
            ),
            PerturbationBinding(
                "node", "R1 node", _pair("gb", "(ab bb) ab (ab bb)^-1"), "RB3", TORUS_ANCHOR,
                rb3=_rb3("a ab", "b bb g gb"),
                note="replaces one of the two R1 commutators",
            ),
            PerturbationBinding(
                "A11→A10", "a=ab=b=bb", _chain("a", "ab", "b", "bb"), "Z6", ABELIAN_ANCHOR,
            ),
        ),
        metadata=(("singularities", "(A11 + 2A2) + A2 + 2A1"),),
    ),
    CaseRecord(
        id="2a5+2a2+d5",
        curve_id="B2'+L",
        section=("27", "-9/2", "-1/16"),
        section_anchor="same triple as a11+3a2 with the roles of the two sections exchanged",
        generator_ordering=("a", "b", "d", "g"),
        pibar_generators=("a", "b", "d", "g"),
        pibar_relations=PIBAR_A11_3A2,
        distinguished_generator="a",
        pi1_generators=("b", "bb", "d", "db", "g", "gb"),
        pi1_relations=(
            R("R5 pair", ("db b bb b = d bb b bb",)),
            R("R5 commutation", ("db b = b d", "d bb = bb db")),
            R("R1", ("(b bb db) gb (b bb db)^-1 = (bb b d) g (bb b d)^-1",)),
            R("Q5", ("(g d)^3 = (d g)^3", "(gb db)^3 = (db gb)^3")),
            R("vertical tangent", ("b = (d g d) g (d g d)^-1", "bb = (db gb db) gb (db gb db)^-1")),
            R("Q1", ("(b d g) d (b d g)^-1 = (bb db gb) db (bb db gb)^-1",)),
            R("relation at infinity", ("bb db gb b d g = 1",)),
        ),
        match_mode="spectra",
        expected=Expected("OTHER", "reducible: three cuspidal quartic and conic"),
        perturbations=(
            PerturbationBinding(
                "D5→A4", "b=bb=d=db", _chain("b", "bb", "d", "db"), "RB3", TORUS_ANCHOR,
                rb3=_rb3("b bb d db", "g gb"),
            ),
            PerturbationBinding("A5→A4", "d=g", _pair("d", "g"), "Z6", ABELIAN_ANCHOR),
        ),
        metadata=(("singularities", "(2A5 + 2A2) + D5"),),
    ),
    CaseRecord(
        id="a11+2a2+d4",
        curve_id="B2",
        section=("1/3", "-11/6", "15/16"),
        section_anchor="through R5 and tangent to x = y^2 at R1",
        generator_ordering=("a", "b", "d", "g"),
        pibar_generators=("a", "b", "d", "g"),
        pibar_relations=PIBAR_A11_2A2_D4,
        distinguished_generator="d",
        pi1_generators=("a", "ab", "b", "bb", "g", "gb"),
        pi1_relations=(
            R("R5 pair", ("(a b)^3 = bb ab bb a b a", "(ab bb)^3 = b a b ab bb ab")),
            R("R5 commutation", ("a b = ab bb",)),
            R("R1 braid", ("b gb g = g b gb", "bb g gb = gb bb g")),
            R("R1 commutation", ("b gb = gb bb", "bb g = g b")),
            R("vertical tangent", ("(b a b)^-1 a (b a b) = gb", "(bb ab bb)^-1 ab (bb ab bb) = g")),
            R("Q1", ("a g^-1 gb = g^-1 gb ab", "ab gb^-1 g = gb^-1 g a")),
            R("relation at infinity", ("a b gb ab bb g = 1",)),
        ),
        expected=Expected("OTHER", "reducible: quartic and conic"),
        perturbations=(
            PerturbationBinding(
                "A11→A8+A2", "a,b", _pair("a", "b"), "RB3", TORUS_ANCHOR,
                rb3=_rb3("a ab", "b bb g gb"),
            ),
            PerturbationBinding(
                "D4→abelianize-local", "b,bb,g,gb",
                ((("g1", "b"), ("g2", "bb"), ("g3", "g"), ("g4", "gb")),),
                "D4P", "presentation reduces to the two-generator D4 quotient",
            ),
            PerturbationBinding(
                "D4→A3-conic", "b=g", _pair("b", "g"), "RB3", TORUS_ANCHOR,
                rb3=_rb3("a ab", "b bb g gb"),
            ),
            PerturbationBinding(
                "A11→A10", "a=ab=b=bb", _chain("a", "ab", "b", "bb"), "Z6", ABELIAN_ANCHOR,
            ),
        ),
        metadata=(("singularities", "(A11 + 2A2) + D4"),),
    ),
    CaseRecord(
        id="a11+e6",
        curve_id="B2",
        section=("0", "0", "1/2"),
        section_anchor="horizontal section y = 1/2 through R5",
        generator_ordering=("a", "b", "d", "g"),
        pibar_generators=("a", "b", "d"),
        pibar_relations=PIBAR_2E7,
        distinguished_generator="d",
        post_steps=(Step("eliminate", "ab", "a"), Step("eliminate", "bb", "b")),
        pi1_generators=("a", "b"),
        pi1_relations=D4_PERTURBED,
        expected=Expected("D4P", "d central; setting d = 1 gives the D4 quotient"),
        perturbations=(
            PerturbationBinding(
                "node", "b=g", _pair("b", "a^-1 b^-1 a b a"), "RB3", TORUS_ANCHOR,
                rb3=_rb3("a", "b"), note="g eliminated as (b a)^-1 a (b a)",
            ),
            PerturbationBinding(
                "A11→A8+A2", "a,b", _pair("a", "b"), "RB3", TORUS_ANCHOR, rb3=_rb3("a", "b"),
            ),
            PerturbationBinding("A11→A10", "a=b", _pair("a", "b"), "Z6", ABELIAN_ANCHOR),
        ),
        metadata=(
            ("pibar source", "a11+2a2+d4 relations with [a,d] = [b,d] = [g,d] = 1, g eliminated"),
            ("singularities", "(E6 + A11) + 2A1"),
        ),
    ),
    CaseRecord(
        id="2a5+e6+a3",
        curve_id="B2",
        section=("0", "0", "-3/2"),
        section_anchor="horizontal section y = -3/2 through R1",
        generator_ordering=("a", "b", "g", "d"),
        pibar_generators=("a", "b", "g", "d"),
        pibar_relations=PIBAR_2A5_E6_A3,
        distinguished_generator="d",
        pi1_generators=("a", "ab", "b", "bb", "g", "gb"),
        pi1_relations=PI1_6_COMMON + (
            R("R1", ("g bb = b g = bb gb = gb b",)),
            PI1_6_INF,
        ),
        match_mode="spectra",
        expected=Expected("OTHER", "reducible: quartic with E6 and conic"),
        perturbations=(
            PerturbationBinding("A5→A4", "a=b", _pair("a", "b"), "Z6", ABELIAN_ANCHOR),
        ),
        metadata=(("singularities", "(E6 + 2A5) + A3"),),
    ),
    CaseRecord(
        id="3a5+d4",
        curve_id="B2",
        section=("0", "-1/3", "-3/4"),
        section_anchor="through R_infinity and tangent to x = y^2 at R1",
        generator_ordering=("a", "b", "g", "d"),
        pibar_generators=("a", "b", "g", "d"),
        pibar_relations=PIBAR_3A5_D4,
        distinguished_generator="d",
        pi1_generators=("a", "ab", "b", "bb", "g", "gb"),
        pi1_relations=PI1_6_COMMON + (
            PI1_6_INF,
            R("R1", ("b g = g bb", "bb gb = gb b", "bb gb g = b g gb")),
        ),
        expected=Expected("OTHER", "reducible: three conics"),
        perturbations=(
            PerturbationBinding(
                "A5→A4", "a=b,ab=bb", _pair("a", "b") + _pair("ab", "bb"), "Z6", ABELIAN_ANCHOR,
                note="both A5 points over R5 perturbed",
            ),
        ),
        metadata=(("singularities", "(3A5) + D4"),),
    ),
    CaseRecord(
        id="a11+a5+a3",
        curve_id="B2",
        section=("0", "-1", "3/4"),
        section_anchor="through P1, P5 and R_infinity",
        generator_ordering=("a", "b", "d", "g"),
        pibar_generators=("a", "b", "d", "g"),
        pibar_relations=PIBAR_A11_A5_A3,
        distinguished_generator="d",
        pi1_generators=("a", "ab", "b", "bb", "g", "gb"),
        pi1_relations=(
            R("R1", ("bb g = g b = gb bb = b gb",)),
            R("R5 commutation", ("a b = ab bb",)),
            R("R5 chain", ("(a b)^3 = bb ab bb a b a = b a b ab bb ab",)),
            R("vertical tangent", ("(b a)^-1 a (b a) = g", "(bb ab)^-1 ab (bb ab) = gb")),
            R("relation at infinity", ("g a b gb ab bb = 1",)),
        ),
        match_mode="spectra",
        expected=Expected("OTHER", "reducible: quartic with A5 and conic"),
        perturbations=(
            PerturbationBinding(
                "A5→A4", "a=g", _chain("a", "g^-1 gb ab gb^-1 g", "g", "g^-1 gb g"),
                "OTHER", "the added relations imply g = gb = a = ab; no group claim",
                result="g = gb = a = ab",
                note="abelianization stays Z2 + Z although the perturbed curve is called irreducible",
            ),
            PerturbationBinding(
                "A11→A10", "a=ab=b=bb", _chain("a", "ab", "b", "bb"), "Z6", ABELIAN_ANCHOR,
            ),
        ),
        metadata=(("singularities", "(A11 + A5) + A3"),),
    ),
    CaseRecord(
        id="2e7+d5",
        curve_id="B2'+L",
        section=("0", "0", "1/2"),
        section_anchor="y = 1/2 with the roles of the sections exchanged",
        generator_ordering=("a", "b", "d", "g"),
        pibar_generators=("a", "b", "d"),
        pibar_relations=PIBAR_2E7,
        distinguished_generator="b",
        post_steps=(Step("eliminate", "db", "d"),),
        pi1_generators=("a", "ab", "d"),
        pi1_relations=MINIMAL,
        match_mode="spectra",
        expected=Expected("MINIMAL", "all groups of this family factor to the minimal group",
                          "Z2 + Z", True),
        perturbations=(
            PerturbationBinding("D5→A4", "a=ab=d", _chain("a", "ab", "d"), "Z6", ABELIAN_ANCHOR),
            PerturbationBinding(
                "E7→A4+A2", "a,d", ((("g1", "a"), ("g2", "d")),), "Z6", ABELIAN_ANCHOR,
                subset=(0,), note="adds at least the braid relation a d a = d a d",
            ),
        ),
        metadata=(("singularities", "2E7 + D5"),),
    ),
    CaseRecord(
        id="2e7+a3+a2",
        curve_id="B2'+L",
        section=("0", "0", "-3/2"),
        section_anchor="y = -3/2 with the roles of the sections exchanged",
        generator_ordering=("a", "b", "g", "d"),
        pibar_generators=("a", "b", "g", "d"),
        pibar_relations=PIBAR_2A5_E6_A3,
        distinguished_generator="b",
        pi1_generators=("a", "ab", "g", "gb", "d", "db"),
        pi1_relations=PI1_9_COMMON + (
            R("R1", ("d gb = g d = gb db = db g",)),
            PI1_9_INF,
        ),
        match_mode="spectra",
        expected=Expected("OTHER", "factors to the minimal group", None, True),
        perturbations=(
            PerturbationBinding(
                "A3→A2", "g=gb=d=db", _chain("g", "gb", "d", "db"), "Z6", ABELIAN_ANCHOR,
            ),
            PerturbationBinding(
                "E7→A4+A2", "a,d,gb", ((("g1", "a"), ("g2", "d"), ("g3", "gb")),),
                "Z6", ABELIAN_ANCHOR, subset=(2,),
                note="adds at least the third relation with (a, d, gb) in the standard fibre",
            ),
        ),
        metadata=(("singularities", "2E7 + A3 + A2"),),
    ),
    CaseRecord(
        id="2e7+a2+3a1",
        curve_id="B2'+L",
        section=("0", "0", "3/4"),
        section_anchor="y = 3/4, tangent to the conic and to x = y^2 at R_infinity",
        generator_ordering=("a", "d", "b", "g"),
        pibar_generators=(),
        pibar_relations=(),
        distinguished_generator=None,
        pi1_generators=(),
        pi1_relations=(),
        expected=Expected("OTHER", "only the symmetric E7 to A6 perturbation is discussed"),
        metadata=(
            ("status", "no presentation displayed; perturbed group abelian by a verbal argument"),
            ("singularities", "2E7 + A2 + 3A1"),
        ),
    ),
    CaseRecord(
        id="2d5+a7+a2",
        curve_id="B2'+L",
        section=("0", "-1/3", "-3/4"),
        section_anchor="same triple as 3a5+d4 with the roles of the sections exchanged",
        generator_ordering=("a", "b", "g", "d"),
        pibar_generators=("a", "b", "g", "d"),
        pibar_relations=PIBAR_3A5_D4,
        distinguished_generator="b",
        pi1_generators=("a", "ab", "g", "gb", "d", "db"),
        pi1_relations=PI1_9_COMMON + (
            PI1_9_INF,
            R("R1", ("g d = gb db", "db g d g = (g d)^2", "d gb db gb = (gb db)^2")),
        ),
        expected=Expected("OTHER", "factors to the minimal group", None, True),
        perturbations=(
            PerturbationBinding(
                "A7→A6", "g=gb=d=db", _chain("g", "gb", "d", "db"), "Z6", ABELIAN_ANCHOR,
            ),
            PerturbationBinding(
                "D5→A4", "a=gb", _chain("a", "(gb db) gb (gb db)^-1", "gb db gb^-1"),
                "Z6", ABELIAN_ANCHOR,
            ),
        ),
        metadata=(("singularities", "2D5 + A7 + A2"),),
    ),
    CaseRecord(
        id="3d5+a3",
        curve_id="B2'+L",
        section=("0", "-1", "3/4"),
        section_anchor="same triple as a11+a5+a3 with the roles of the sections exchanged",
        generator_ordering=("a", "b", "d", "g"),
        pibar_generators=("a", "b", "d", "g"),
        pibar_relations=PIBAR_A11_A5_A3,
        distinguished_generator="b",
        pi1_generators=("a", "ab", "d", "db", "g", "gb"),
        pi1_relations=(
            R("R1", ("d g = db gb = g db = gb d",)),
            R("R5 commutation", ("d a = a db", "db ab = ab d")),
            R("R5 braid", ("d a ab a = db ab a ab",)),
            R("vertical tangent", ("a^-1 ab a = g", "ab^-1 a ab = gb")),
            R("relation at infinity", ("d g a db gb ab = 1",)),
        ),
        match_mode="spectra",
        expected=Expected("OTHER", "factors to the minimal group", None, True),
        perturbations=(
            PerturbationBinding(
                "A3→A2", "g=gb=d=db", _chain("g", "gb", "d", "db"), "Z6", ABELIAN_ANCHOR,
            ),
            PerturbationBinding(
                "D5→A4", "a=ab=d=db", _chain("a", "ab", "d", "db"), "Z6", ABELIAN_ANCHOR,
            ),
        ),
        metadata=(("singularities", "3D5 + A3"),),
    ),
)

# auxiliary presentations used by the group checks
NAMED_PRESENTATIONS: Dict[str, Tuple[Tuple[str, ...], Tuple[str, ...]]] = {
    "minimal": (("a", "ab", "d"), ("a ab a = ab a ab", "[a, d]", "[ab, d]", "a^2 ab^2 d^2 = 1")),
    "minimal-mod-d": (("a", "ab"), ("a ab a = ab a ab", "a^2 ab^2 = 1")),
    "d4-perturbed": (("a", "b"), ("(a b)^3 = (b a)^3", "(a b a)^2")),
    "2e7-pibar": (("a", "b", "d"), ("(a b)^3 = (b a)^3", "[a, d]", "[b, d]", "(a b a)^2 d^2")),
    "simplest": (("g", "d"), ("(g d)^2 = (d g)^2", "(g d g)^2")),
    "simplest-uv": (("u", "v"), ("v^2", "[v, u^2]")),
    "rb3": (("u", "v"), ("u^2", "v^3")),
    "b3-mod-center": (("s1", "s2"), ("s1 s2 s1 = s2 s1 s2", "(s1 s2)^3")),
}
