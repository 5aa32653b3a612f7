"""The two trigonal curves, ramification sections and the displayed identities.

Curves live in affine coordinates ``(x, y)`` of the Hirzebruch surface; a
section disjoint from the exceptional curve is ``y = a x^2 + b x + c``.

* ``f1 = -y^3 + y^2 - x^3 (2y - x^3)``, parametrized by
  ``x = t/(t^3+1)``, ``y = 1/(t^3+1)^2``.
* ``f2 = (y^2 - x)(y - l(x))`` with ``l(x) = -x^2 + 3x/2 + 3/16``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict

from .numberfield import QQ, FieldElement, NumberField
from .poly import BivariatePoly, PolyError, UnivariatePoly, discriminant_y

F = Fraction


class SectionError(ValueError):
    pass


@dataclass(frozen=True)
class SectionCoeffs:
    a: FieldElement
    b: FieldElement
    c: FieldElement

    @classmethod
    def of(cls, a, b, c, field: NumberField = None) -> "SectionCoeffs":
        vals = [a, b, c]
        if field is None:
            field = QQ
            for v in vals:
                if isinstance(v, FieldElement) and v.field != QQ:
                    field = v.field
        return cls(*(field(v) for v in vals))

    @property
    def field(self) -> NumberField:
        return self.a.field

    def poly(self) -> UnivariatePoly:
        return UnivariatePoly([self.c, self.b, self.a])

    def __call__(self, x0):
        return self.poly()(x0)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


def f1(field: NumberField = QQ) -> BivariatePoly:
    # -y^3 + y^2 - 2 x^3 y + x^6
    return BivariatePoly.from_terms({(0, 3): -1, (0, 2): 1, (3, 1): -2, (6, 0): 1}, field)


def l_poly(field: NumberField = QQ) -> UnivariatePoly:
    return UnivariatePoly([F(3, 16), F(3, 2), -1], field)


def f2(field: NumberField = QQ) -> BivariatePoly:
    y = BivariatePoly.y(field)
    x = BivariatePoly.of_x(UnivariatePoly.x(field))
    return (y * y - x) * (y - BivariatePoly.of_x(l_poly(field)))


CURVES: Dict[str, Callable[..., BivariatePoly]] = {"B1": f1, "B2": f2}


def restrict_to_section(f: BivariatePoly, s: SectionCoeffs) -> UnivariatePoly:
    """``g(x) = f(x, s(x))``; a zero result means the section is a component."""
    g = f.subs_y(s.poly())
    if g.is_zero():
        raise SectionError("section is a component of the curve")
    return g


def multiplicity_at(g: UnivariatePoly, x0) -> int:
    """Largest ``m`` with ``(x - x0)^m`` dividing ``g``."""
    if g.is_zero():
        raise PolyError("multiplicity of the zero polynomial is undefined")
    field = g.field if not isinstance(x0, FieldElement) or x0.field == QQ else x0.field
    lin = UnivariatePoly([-field(x0), 1], field)
    m = 0
    while g.degree() >= 1:
        q, r = g.divmod(lin)
        if r:
            break
        g, m = q, m + 1
    return m


def strip_root(g: UnivariatePoly, x0, m: int) -> UnivariatePoly:
    field = g.field if not isinstance(x0, FieldElement) or x0.field == QQ else x0.field
    lin = UnivariatePoly([-field(x0), 1], field)
    for _ in range(m):
        g = g.exact_div(lin)
    return g


# --- identities -------------------------------------------------------------


def _cleared(f: BivariatePoly, xnum: UnivariatePoly, ynum: UnivariatePoly,
             den: UnivariatePoly, weight: int) -> UnivariatePoly:
    """``den^weight * f(xnum/den, ynum/den^2)`` for ``f`` of weighted degree <= weight."""
    out = UnivariatePoly([], f.field)
    for (i, j), c in f.terms().items():
        k = weight - i - 2 * j
        if k < 0:
            raise PolyError("weighted degree exceeds the clearing exponent")
        out = out + (xnum ** i) * (ynum ** j) * (den ** k) * c
    return out


def _id_f1_torus() -> bool:
    y = BivariatePoly.y()
    x3 = BivariatePoly.of_x(UnivariatePoly([0, 0, 0, 1]))
    return f1() == (-y) ** 3 + (y - x3) ** 2


def _id_f2_torus() -> bool:
    x = BivariatePoly.of_x(UnivariatePoly.x())
    y = BivariatePoly.y()
    p = y * 4 - x * 4 - 1
    q = x * y * 8 + y * 6 - x * 12 - 1
    return f2() * 64 == p ** 3 + q ** 2


def _id_f1_param() -> bool:
    t = UnivariatePoly.x()
    den = t ** 3 + 1
    return _cleared(f1(), t, UnivariatePoly([1]), den, 6).is_zero()


A11_3A2_SECTION = (F(27), F(-9, 2), F(-1, 16))


def _id_b2_iso() -> bool:
    lhs = f2().subs_x(UnivariatePoly([0, 9])).scale_y(-3)
    x = BivariatePoly.of_x(UnivariatePoly.x())
    y = BivariatePoly.y()
    a, b, c = A11_3A2_SECTION
    s = BivariatePoly.of_x(UnivariatePoly([c, b, a]))
    return lhs == (y * y - x) * (y - s) * (-27)


def _id_sextic_even(seed: int = 0) -> bool:
    rng = random.Random(seed)
    for _ in range(5):
        s = UnivariatePoly([F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)])
        y = BivariatePoly.y()
        dbl = f1().subs_y_bivariate(y * y + BivariatePoly.of_x(s))
        if any(not dbl.ycoeffs[j].is_zero() for j in range(1, len(dbl.ycoeffs), 2)):
            return False
    return True


def _id_l_contact() -> bool:
    l = l_poly()
    x = UnivariatePoly.x()
    return l * l - x == (x - F(1, 4)) ** 3 * (x - F(9, 4))


def _id_f1_discriminant() -> bool:
    x = UnivariatePoly.x()
    return discriminant_y(f1()) == -(x ** 9) * (x ** 3 * 27 - 4)


def _id_f2_discriminant() -> bool:
    x = UnivariatePoly.x()
    l = l_poly()
    return discriminant_y(f2()) == x * 4 * (l * l - x) ** 2


IDENTITIES: Dict[str, Callable[[], bool]] = {
    "f1-torus": _id_f1_torus,
    "f2-torus": _id_f2_torus,
    "f1-param": _id_f1_param,
    "b2-iso": _id_b2_iso,
    "sextic-even": _id_sextic_even,
    "l-contact": _id_l_contact,
    "f1-discriminant": _id_f1_discriminant,
    "f2-discriminant": _id_f2_discriminant,
}


def verify_identity(name: str, seed: int = 0) -> bool:
    """Evaluate one named identity; ``seed`` only affects the randomized ones."""
    try:
        check = IDENTITIES[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(IDENTITIES)}") from None
    if check is _id_sextic_even:
        return check(seed)
    return check()
