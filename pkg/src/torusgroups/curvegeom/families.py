"""Special sections with prescribed contact and their verification.

Each family builds ``(a, b, c)`` from closed formulas in its parameters,
restricts the relevant curve to the section and checks the multiplicities
at the contact points.  All arithmetic is exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .curves import (
    SectionCoeffs,
    f1,
    f2,
    l_poly,
    multiplicity_at,
    restrict_to_section,
    strip_root,
)
from .numberfield import QQ, FieldElement, NumberField
from .poly import UnivariatePoly

F = Fraction

# theta^3 = -4, so delta = theta/2 satisfies delta^3 = -1/2 and theta = -cbrt(4)
CBRT4_FIELD = NumberField((4, 0, 0, 1), name="theta")


class ExclusionError(ValueError):
    """Parameters hit one of a family's excluded values."""


@dataclass
class PointCheck:
    label: str
    x: FieldElement
    required: int
    actual: int
    exact: bool = False

    @property
    def ok(self) -> bool:
        return self.actual == self.required if self.exact else self.actual >= self.required


@dataclass
class FamilyReport:
    family: str
    params: Dict[str, FieldElement]
    curve: str
    section: SectionCoeffs
    restricted: UnivariatePoly
    points: List[PointCheck]
    facts: List[Tuple[str, bool, str]] = field(default_factory=list)
    detected: int = 0
    residual_degree: int = 0
    at_infinity: int = 0

    @property
    def total(self) -> int:
        return self.detected + self.residual_degree + self.at_infinity

    @property
    def passed(self) -> bool:
        return (
            all(p.ok for p in self.points)
            and all(ok for _, ok, _ in self.facts)
            and self.total == 6
        )

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "curve": self.curve,
            "section": [str(self.section.a), str(self.section.b), str(self.section.c)],
            "points": [
                {"label": p.label, "x": str(p.x), "required": p.required,
                 "exact": p.exact, "actual": p.actual, "ok": p.ok}
                for p in self.points
            ],
            "facts": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.facts],
            "bookkeeping": {"detected": self.detected, "residual_degree": self.residual_degree,
                            "at_infinity": self.at_infinity, "total": self.total},
            "passed": self.passed,
        }


def x_t(t):
    return t / (t ** 3 + 1)


def y_t(t):
    return 1 / (t ** 3 + 1) ** 2


def _require(cond: bool, text: str):
    if not cond:
        raise ExclusionError(f"excluded parameter: {text}")


def _tangent_bc(t, a):
    d1 = 2 * t ** 3 - 1
    d2 = t ** 3 + 1
    b = -(2 * t * d1 * a - 6 * t ** 2) / (d1 * d2)
    c = (t ** 2 * d1 * a - (4 * t ** 3 + 1)) / (d1 * d2 ** 2)
    return b, c


# each builder returns (curve, section, [(label, x0, min_mult)], facts, pin)
# where ``pin`` is an optional (x0, y0) that must lie on the section


def _fam_tangent(p):
    t, a = p["t"], p["a"]
    _require(2 * t ** 3 != 1, "2t^3 = 1")
    if t ** 3 == -1:
        # tangency point moves to infinity
        _require(a == -t, "t^3 = -1 requires a = -t")
        s = SectionCoeffs.of(a, -2 * t ** 2 / 3, p.get("c", a.field.zero()))
        return "B1", s, [], [], None, 2
    b, c = _tangent_bc(t, a)
    s = SectionCoeffs.of(a, b, c)
    return "B1", s, [("tangency", x_t(t), 2)], [], (x_t(t), y_t(t)), 0


def _fam_inflection(p):
    t = p["t"]
    _require(2 * t ** 3 != 1, "2t^3 = 1")
    _require(t ** 3 != -1, "t^3 = -1")
    d = (2 * t ** 3 - 1) ** 3
    a = 3 * t * (8 * t ** 6 + t ** 3 + 2) / d
    b = -6 * t ** 2 * (4 * t ** 3 + 1) / d
    c = (8 * t ** 3 - 1) / d
    return "B1", SectionCoeffs.of(a, b, c), [("inflection", x_t(t), 3)], [], (x_t(t), y_t(t)), 0


def _fam_quadruple(p):
    dl = p["delta"]
    _require(dl ** 3 == F(-1, 2), "delta^3 != -1/2")
    s = SectionCoeffs.of(-56 * dl / 27, 64 * dl ** 2 / 81, dl.field(F(256, 243)))
    t = dl / 2
    return "B1", s, [("quadruple", x_t(t), 4)], [], (x_t(t), y_t(t)), 0


def _fam_double_tangent(p):
    t1, t2 = p["t1"], p["t2"]
    _require(t1 != t2, "t1 = t2")
    for name, t in (("t1", t1), ("t2", t2)):
        _require(2 * t ** 3 != 1, f"2{name}^3 = 1")
        _require(t ** 3 != -1, f"{name}^3 = -1")
    _require(2 * (t1 + t2) ** 3 == -1, "2(t1+t2)^3 != -1")
    # b(t, a) = B1(t) a + B0(t), c(t, a) = C1(t) a + C0(t)
    zero = t1 * 0
    b0_1, c0_1 = _tangent_bc(t1, zero)
    b0_2, c0_2 = _tangent_bc(t2, zero)
    b1_1, c1_1 = (v - w for v, w in zip(_tangent_bc(t1, zero + 1), (b0_1, c0_1)))
    b1_2, c1_2 = (v - w for v, w in zip(_tangent_bc(t2, zero + 1), (b0_2, c0_2)))
    if b1_1 != b1_2:
        a = (b0_2 - b0_1) / (b1_1 - b1_2)
    else:
        a = (c0_2 - c0_1) / (c1_1 - c1_2)
    b, c = _tangent_bc(t1, a)
    b2_, c2_ = _tangent_bc(t2, a)
    facts = [("linear system consistent", b == b2_ and c == c2_, f"a = {a}")]
    s = SectionCoeffs.of(a, b, c)
    x1, x2 = x_t(t1), x_t(t2)
    if x1 == x2:
        pts = [("double tangency (same fibre)", x1, 4)]
    else:
        pts = [("tangency at t1", x1, 2), ("tangency at t2", x2, 2)]
    on2 = s(x2) == y_t(t2)
    facts.append(("second point on section", on2, f"x = {x2}"))
    return "B1", s, pts, facts, (x1, y_t(t1)), 0


def _fam_b2_inflection(p):
    t = p["t"]
    _require(t != 0, "t = 0")
    s = SectionCoeffs.of(-1 / (8 * t ** 3), 3 / (4 * t), 3 * t / 8)
    return "B2", s, [("inflection on y^2 = x", t ** 2, 3)], [], (t ** 2, t), 0


def _fam_b2_tangent(p):
    t, a = p["t"], p["a"]
    _require(t != 0, "t = 0")
    s = SectionCoeffs.of(a, -(4 * a * t ** 3 - 1) / (2 * t), a * t ** 4 + t / 2)
    return "B2", s, [("tangency on y^2 = x", t ** 2, 2)], [], (t ** 2, t), 0


def _conic_contact_x(s: SectionCoeffs):
    return -(s.b - F(3, 2)) / (2 * (s.a + 1))


def _fam_b2_conic_tangent(p):
    a, b = p["a"], p["b"]
    _require(a != -1, "a = -1")
    c = (3 * a + 4 * b ** 2 - 12 * b + 12) / (16 * (a + 1))
    s = SectionCoeffs.of(a, b, c)
    cond = -16 * a * c + 3 * a + 4 * b ** 2 - 12 * b - 16 * c + 12
    facts = [("printed tangency condition vanishes", cond == 0, str(cond))]
    x0 = _conic_contact_x(s)
    return "B2", s, [("tangency on y = l(x)", x0, 2)], facts, None, 0


def _fam_b2_bitangent(p):
    t = p["t"]
    _require(t != 0, "t = 0")
    _require(2 * t + 3 != 0, "t = -3/2")
    # a = -1 (tangency with y = l(x) at infinity) happens at t = -1 and t = 1/2
    _require(t != -1 and 2 * t != 1, "t in {-1, 1/2}")
    a = -1 / (t ** 2 * (2 * t + 3))
    s = SectionCoeffs.of(a, 3 * (2 * t + 1) / (2 * t * (2 * t + 3)), 3 * t / (2 * (2 * t + 3)))
    x0 = _conic_contact_x(s)
    pts = [("tangency on y^2 = x", t ** 2, 2), ("tangency on y = l(x)", x0, 2)]
    if x0 == t ** 2:
        pts = [("tangency to both components", x0, 4)]
    return "B2", s, pts, [], (t ** 2, t), 0


@dataclass(frozen=True)
class Family:
    name: str
    params: Tuple[str, ...]
    build: Callable
    sampler: Optional[Callable] = None


def _rand_q(rng: random.Random) -> Fraction:
    return F(rng.randint(-20, 20), rng.randint(1, 12))


def _sample_t(rng):
    return {"t": QQ(_rand_q(rng))}


def _sample_t_a(rng):
    return {"t": QQ(_rand_q(rng)), "a": QQ(_rand_q(rng))}


def _sample_double(rng):
    t1 = CBRT4_FIELD(_rand_q(rng))
    return {"t1": t1, "t2": CBRT4_FIELD.gen() / 2 - t1}


def _sample_a_b(rng):
    return {"a": QQ(_rand_q(rng)), "b": QQ(_rand_q(rng))}


def _fixed_quadruple(rng):
    return {"delta": CBRT4_FIELD.gen() / 2}


FAMILIES: Dict[str, Family] = {
    f.name: f
    for f in (
        Family("tangent", ("t", "a"), _fam_tangent, _sample_t_a),
        Family("inflection", ("t",), _fam_inflection, _sample_t),
        Family("quadruple", ("delta",), _fam_quadruple, _fixed_quadruple),
        Family("double-tangent", ("t1", "t2"), _fam_double_tangent, _sample_double),
        Family("b2-inflection", ("t",), _fam_b2_inflection, _sample_t),
        Family("b2-tangent", ("t", "a"), _fam_b2_tangent, _sample_t_a),
        Family("b2-conic-tangent", ("a", "b"), _fam_b2_conic_tangent, _sample_a_b),
        Family("b2-bitangent", ("t",), _fam_b2_bitangent, _sample_t),
    )
}


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}") from None


def _as_elements(params: Dict[str, object]) -> Dict[str, FieldElement]:
    out = {}
    target = QQ
    for v in params.values():
        if isinstance(v, FieldElement) and v.field != QQ:
            target = v.field
    for k, v in params.items():
        out[k] = target(v) if not isinstance(v, FieldElement) or v.field == QQ else v
    return out


def verify_family(name: str, params: Dict[str, object],
                  expected: Optional[Dict[object, int]] = None) -> FamilyReport:
    """Build the family's section, restrict and check contact orders.

    ``expected`` maps extra x-values to exact multiplicities and is checked
    on top of the family's own minimum requirements.
    """
    fam = get_family(name)
    missing = [k for k in fam.params if k not in params]
    if missing:
        raise ValueError(f"family {name!r} needs parameters {list(fam.params)}; missing {missing}")
    p = _as_elements(params)
    curve, s, pts, facts, pin, at_inf_min = fam.build(p)
    poly = f1(s.field) if curve == "B1" else f2(s.field)
    g = restrict_to_section(poly, s)
    checks: List[PointCheck] = []
    for label, x0, need in pts:
        checks.append(PointCheck(label, x0, need, multiplicity_at(g, x0)))
    for x0, m in (expected or {}).items():
        x0 = s.field(x0)
        checks.append(PointCheck("expected", x0, m, multiplicity_at(g, x0), exact=True))
    if pin is not None:
        x0, y0 = pin
        facts = list(facts) + [("contact point lies on section", s(x0) == y0, f"({x0}, {y0})")]
    at_inf = 6 - g.degree()
    if at_inf_min:
        facts = list(facts) + [(f"multiplicity at infinity >= {at_inf_min}", at_inf >= at_inf_min,
                                f"{at_inf}")]
    # bookkeeping over distinct detected roots
    residual = g
    detected = 0
    seen = []
    for c in checks:
        if any(c.x == x for x in seen):
            continue
        seen.append(c.x)
        m = multiplicity_at(residual, c.x)
        residual = strip_root(residual, c.x, m)
        detected += m
    if name == "quadruple" and residual.degree() == 2:
        theta = s.field.gen()
        c0, c1, c2 = residual.coeffs
        root_sum = -c1 / c2
        root_prod = c0 / c2
        facts = list(facts) + [
            ("residual root sum = 88/327 theta", root_sum == theta * F(88, 327), str(root_sum)),
            ("residual root product = 208/981 theta^2", root_prod == theta ** 2 * F(208, 981),
             str(root_prod)),
        ]
    return FamilyReport(
        family=name, params=p, curve=curve, section=s, restricted=g, points=checks,
        facts=list(facts), detected=detected, residual_degree=residual.degree(),
        at_infinity=at_inf,
    )


def sample_params(name: str, rng: random.Random, tries: int = 1000) -> Dict[str, FieldElement]:
    """Random parameters for a family, skipping excluded values."""
    fam = get_family(name)
    for _ in range(tries):
        p = fam.sampler(rng)
        try:
            fam.build(_as_elements(p))
        except (ExclusionError, ZeroDivisionError):
            continue
        return p
    raise RuntimeError(f"could not sample admissible parameters for {name!r}")


def sample_family(name: str, samples: int, seed: int = 0) -> List[FamilyReport]:
    rng = random.Random(seed)
    if name == "quadruple":
        samples = 1
    return [verify_family(name, sample_params(name, rng)) for _ in range(samples)]
