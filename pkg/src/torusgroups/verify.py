"""Check records and the per-case verification battery used by the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from . import notation, registry
from .braid import conj_star, parse_braid, relations_of
from .invariants import (
    DEFAULT_LIMIT,
    CosetOverflow,
    FiniteGroupTable,
    abelianization,
    battery,
    epi_exists,
    group_by_name,
    rb3_presentation,
    rb3_verify,
    spectrum,
    todd_coxeter,
)
from .invariants.z2z3 import braid_assignment
from .presentation import (
    Presentation,
    canonical_relator,
    eliminate_generator,
    matches_relators,
    quotient_add_relators,
)
from .word import Word, format_word

PASS, FAIL, INCONCLUSIVE = "PASS", "FAIL", "INCONCLUSIVE"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""
    anchor: str = ""

    def to_json_obj(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail,
                "anchor": self.anchor}


@dataclass
class Report:
    target: str
    checks: List[Check] = field(default_factory=list)

    def add(self, name: str, status: str, detail: str = "", anchor: str = "") -> Check:
        c = Check(name, status, detail, anchor)
        self.checks.append(c)
        return c

    def extend(self, checks: Sequence[Check]) -> None:
        self.checks.extend(checks)

    @property
    def exit_code(self) -> int:
        return 1 if any(c.status == FAIL for c in self.checks) else 0

    def to_json_obj(self) -> dict:
        return {"target": self.target, "checks": [c.to_json_obj() for c in self.checks],
                "exit": self.exit_code}


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


@dataclass
class Options:
    coset_limit: int = DEFAULT_LIMIT
    groups: Optional[Sequence[FiniteGroupTable]] = None

    def battery(self) -> List[FiniteGroupTable]:
        return list(self.groups) if self.groups is not None else battery()


# --- building blocks ---------------------------------------------------------


def check_order(p: Presentation, expected: int, name: str, anchor: str,
                limit: int = DEFAULT_LIMIT) -> Check:
    """Todd-Coxeter order; overflow is inconclusive, never a failure."""
    try:
        n = todd_coxeter(p, (), limit)
    except CosetOverflow as exc:
        return Check(name, INCONCLUSIVE, str(exc), anchor)
    return Check(name, _status(n == expected), f"order {n}, expected {expected}", anchor)


def rb3_checks(p: Presentation, rb3_map, prefix: str, anchor: str,
               opts: Options) -> List[Check]:
    """Necessary conditions for a group claimed isomorphic to ``Z2 * Z3``."""
    out = []
    ab = abelianization(p)
    out.append(Check(f"{prefix}abelianization", _status(str(ab) == "Z6"), str(ab), anchor))
    if rb3_map:
        s1 = [g for g, s in rb3_map if s == "s1"]
        s2 = [g for g, s in rb3_map if s == "s2"]
        ok = rb3_verify(p, braid_assignment(s1, s2))
        out.append(Check(f"{prefix}rb3-epimorphism", _status(ok),
                         f"s1 <- {' '.join(s1)}; s2 <- {' '.join(s2)}", anchor))
    out.append(Check(f"{prefix}S3-epi", _status(epi_exists(p, group_by_name("S3"))), "", anchor))
    groups = opts.battery()
    got = spectrum(p, groups)
    want = spectrum(rb3_presentation(), groups)
    out.append(Check(f"{prefix}spectrum", _status(got == want),
                     _fmt_spectrum(got) + ("" if got == want else f"; Z2*Z3: {_fmt_spectrum(want)}"),
                     anchor))
    return out


def spectrum_equal(p: Presentation, q: Presentation, name: str, anchor: str,
                   opts: Options, what: str = "") -> Check:
    groups = opts.battery()
    a, b = spectrum(p, groups), spectrum(q, groups)
    detail = _fmt_spectrum(a) if a == b else f"{_fmt_spectrum(a)} vs {what} {_fmt_spectrum(b)}"
    return Check(name, _status(a == b), detail, anchor)


def _fmt_spectrum(s: Dict[str, int]) -> str:
    return " ".join(f"{k}:{v}" for k, v in s.items())


# --- per case ----------------------------------------------------------------


def reconstruction_checks(case: registry.CaseRecord, opts: Options) -> List[Check]:
    anchor = "double covering passage over the distinguished generator"
    computed = registry.reconstruct_pi1(case)
    printed = registry.pi1_presentation(case)
    missing, extra = matches_relators(computed, printed.relators)
    literal = f"{len(printed.relators) - len(missing)}/{len(printed.relators)} printed relators matched, {len(extra)} computed unmatched"
    if case.match_mode == "relators":
        return [Check("double-cover relators", _status(not missing and not extra), literal, anchor)]
    c = spectrum_equal(computed, printed, "double-cover spectra", anchor, opts, "printed")
    c.detail = f"{literal}; {c.detail}"
    return [c]


def expected_checks(case: registry.CaseRecord, opts: Options) -> List[Check]:
    e = case.expected
    p = registry.pi1_presentation(case)
    out: List[Check] = []
    if e.tag == "RB3":
        return rb3_checks(p, e.rb3, "", e.anchor, opts)
    if e.abelianization is not None:
        ab = abelianization(p)
        out.append(Check("abelianization", _status(str(ab) == e.abelianization),
                         f"{ab}, expected {e.abelianization}", e.anchor))
    if e.s3_epi is not None:
        got = epi_exists(p, group_by_name("S3"))
        out.append(Check("S3-epi", _status(got == e.s3_epi), str(got), e.anchor))
    if e.tag == "D4P":
        out.append(spectrum_equal(p, registry.named_presentation("d4-perturbed"),
                                  "D4-quotient spectra", e.anchor, opts, "reference"))
    if e.tag == "MINIMAL":
        out.extend(minimal_checks(p, e.anchor, opts))
    return out


def minimal_checks(p: Presentation, anchor: str, opts: Options) -> List[Check]:
    """Checks of the central extension ``<a, ab, d | ...>`` by ``d``."""
    out = []
    mod_d = quotient_add_relators(p, [Word.gen("d")])
    out.append(check_order(mod_d, 12, "quotient by d order", anchor, opts.coset_limit))
    ok = epi_exists(p, group_by_name("A4"))
    detail = "" if ok else f"none; the order-12 quotient by d has abelianization {abelianization(mod_d)}"
    out.append(Check("A4-epi", _status(ok), detail, anchor))
    return out


def perturbation_checks(case: registry.CaseRecord, opts: Options) -> List[Check]:
    out: List[Check] = []
    for b in case.perturbations:
        p = registry.apply_perturbation(case, b.rule, b.binding)
        prefix = f"{b.rule} [{b.binding}] "
        if b.expected == "RB3":
            out.extend(rb3_checks(p, b.rb3, prefix, b.anchor, opts))
        elif b.expected in ("Z6", "ABELIAN"):
            out.append(check_order(p, 6, prefix + "order", b.anchor, opts.coset_limit))
        elif b.expected == "D4P":
            ref = registry.named_presentation("d4-perturbed")
            ab, ab_ref = abelianization(p), abelianization(ref)
            out.append(Check(prefix + "abelianization", _status(ab == ab_ref),
                             f"{ab}, reference {ab_ref}", b.anchor))
            out.append(spectrum_equal(p, ref, prefix + "spectra", b.anchor, opts, "reference"))
        elif b.result:
            # necessary condition: the stated consequences change no hom count
            c = spectrum_equal(p, quotient_add_relators(p, [b.result]),
                               prefix + "implied relations", b.anchor, opts, "with implied")
            c.detail = f"{b.result}; abelianization {abelianization(p)}; {c.detail}"
            out.append(c)
        else:
            out.append(Check(prefix + "claim", INCONCLUSIVE,
                             f"no decidable check for tag {b.expected}", b.anchor))
    return out


def braid_checks(case: registry.CaseRecord) -> List[Check]:
    """The 2a8+a3 monodromy: ``n+ = m m+^-1`` acting on ``(d, a, b, g)``."""
    braids = dict(case.braids)
    if "m" not in braids or "m+" not in braids:
        return []
    basis = case.generator_ordering
    m = parse_braid(braids["m"], len(basis))
    mp = parse_braid(braids["m+"], len(basis))
    rel = relations_of(m * mp.inverse(), basis)[0]
    anchor = "braid n+ = m m+^-1 acting on the distinguished generator"
    out = []
    printed = dict(case.metadata).get("Q+ relation")
    if printed:
        target = notation.relators(printed)[0]
        out.append(Check("n+ relation (as printed)",
                         _status(canonical_relator(rel) == canonical_relator(target)),
                         f"computed {format_word(rel)} = 1", anchor))
    pibar = registry.pibar_presentation(case)
    stored = [r for r, lab in zip(pibar.relators, pibar.labels)
              if lab == "transversal intersection Q+"]
    ok = bool(stored) and canonical_relator(rel) == canonical_relator(stored[0])
    out.append(Check("n+ relation vs stored commutator", _status(ok),
                     "equal up to rotation and inversion" if ok else "differs", anchor))
    if stored:
        minus = [r for r, lab in zip(pibar.relators, pibar.labels)
                 if lab == "transversal intersection Q-"]
        img = conj_star(stored[0], basis)
        ok = bool(minus) and _conjugate_cyclic(img, minus[0], pibar)
        out.append(Check("Q- relation is the conj_star image", _status(ok), "", anchor))
    return out


def _conjugate_cyclic(u: Word, v: Word, p: Presentation) -> bool:
    """``u`` and ``v`` agree after the Tietze substitution ``a = b`` and up to rotation/inversion."""
    keys = {canonical_relator(u), canonical_relator(v)}
    if len(keys) == 1:
        return True
    if "a" in p.generators and "b" in p.generators:
        q = Presentation(p.generators, (u, v))
        q = eliminate_generator(q, "a", Word.gen("b"))
        if len(q.relators) == 1:
            return True
        return canonical_relator(q.relators[0]) == canonical_relator(q.relators[1])
    return False


def derivation_checks(case: registry.CaseRecord, opts: Options) -> List[Check]:
    """a11+e6: making d central in a11+2a2+d4 and dropping g gives the stored group."""
    if case.id != "a11+e6":
        return []
    base = registry.pibar_presentation("a11+2a2+d4")
    q = quotient_add_relators(base, ["a d a^-1 d^-1", "b d b^-1 d^-1", "g d g^-1 d^-1"])
    q = eliminate_generator(q, "g", notation.expand("(b a b d)^-1 a (b a b d)"))
    return [spectrum_equal(q, registry.pibar_presentation(case), "pibar derivation spectra",
                           "d central in the a11+2a2+d4 group", opts, "stored")]


def verify_case(case_id: str, opts: Optional[Options] = None) -> Report:
    opts = opts or Options()
    case = registry.get_case(case_id)
    rep = Report(case.id)
    if not case.has_presentations():
        rep.add("presentation", INCONCLUSIVE, dict(case.metadata).get("status", "no presentation"),
                case.expected.anchor)
        return rep
    steps: List[Callable[[registry.CaseRecord, Options], List[Check]]] = [
        reconstruction_checks, expected_checks, perturbation_checks, derivation_checks,
    ]
    for step in steps:
        rep.extend(step(case, opts))
    rep.extend(braid_checks(case))
    return rep
