import random
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from torusgroups import curvegeom as cg
from torusgroups.curvegeom import (
    CBRT4_FIELD,
    QQ,
    BivariatePoly,
    NumberField,
    SectionCoeffs,
    SectionError,
    UnivariatePoly,
    discriminant_y,
    parse_element,
    parse_minpoly,
    resultant_y,
)
from torusgroups.curvegeom.poly import poly_gcd

X, Y, T = sympy.symbols("x y t")
rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)
elems = st.lists(rats, min_size=3, max_size=3).map(lambda c: CBRT4_FIELD(list(c)))


def to_sympy_elem(e):
    """Element of Q(theta) as a sympy expression in t reduced mod t^3 + 4."""
    return sum(sympy.Rational(c.numerator, c.denominator) * T ** i for i, c in enumerate(e.coeffs))


def to_sympy_poly(p, var=X):
    return sum(sympy.Rational(c.to_fraction().numerator, c.to_fraction().denominator) * var ** i
               for i, c in enumerate(p.coeffs))


@given(elems, elems)
def test_field_mul_against_sympy(u, v):
    ref = sympy.rem(sympy.expand(to_sympy_elem(u) * to_sympy_elem(v)), T ** 3 + 4, T)
    assert sympy.expand(to_sympy_elem(u * v) - ref) == 0


@given(elems)
def test_field_inverse(u):
    if u.is_zero():
        with pytest.raises(ZeroDivisionError):
            u.inverse()
    else:
        assert u * u.inverse() == CBRT4_FIELD.one()
        assert u ** -2 * u ** 2 == CBRT4_FIELD.one()


def test_theta_is_minus_cube_root_of_four():
    theta = CBRT4_FIELD.gen()
    assert theta ** 3 == CBRT4_FIELD(-4)
    assert (theta / 2) ** 3 == CBRT4_FIELD(F(-1, 2))


def test_parsing():
    assert parse_minpoly("x^3+4") == parse_minpoly("[4,0,0,1]")
    e = parse_element("[0,1/2,0]/x^3+4")
    assert e == CBRT4_FIELD.gen() / 2
    assert parse_element("3/4") == QQ(F(3, 4))
    assert str(e) == "[0,1/2,0]" and str(QQ(F(-2, 3))) == "-2/3"
    with pytest.raises(ValueError):
        NumberField((1, 2))  # not monic


def test_qq_coerces_into_extension():
    theta = CBRT4_FIELD.gen()
    assert theta + QQ(1) == theta + 1
    with pytest.raises(ValueError):
        theta + NumberField((-2, 0, 1)).gen()


polys = st.lists(rats, min_size=1, max_size=6).map(lambda c: UnivariatePoly(c))


@given(polys, polys)
def test_divmod(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree() < b.degree()


def test_gcd():
    x = UnivariatePoly.x()
    a = (x - 1) ** 2 * (x + 2)
    b = (x - 1) * (x - 3)
    assert poly_gcd(a, b) == x - 1


def test_resultant_against_sympy():
    rng = random.Random(3)
    for _ in range(10):
        f = {(i, j): rng.randint(-5, 5) for i in range(3) for j in range(3)}
        f[(0, 3)] = rng.choice((-2, 1, 3))
        g = {(i, j): rng.randint(-5, 5) for i in range(3) for j in range(2)}
        g[(0, 2)] = rng.choice((1, -1, 2))
        ours = resultant_y(BivariatePoly.from_terms(f), BivariatePoly.from_terms(g))
        sf = sum(c * X ** i * Y ** j for (i, j), c in f.items())
        sg = sum(c * X ** i * Y ** j for (i, j), c in g.items())
        assert sympy.expand(to_sympy_poly(ours) - sympy.resultant(sf, sg, Y)) == 0


def test_discriminant_normalization():
    # y^3 + c has classical discriminant -27 c^2
    f = BivariatePoly.from_terms({(0, 3): 1, (1, 0): 1})
    assert discriminant_y(f) == UnivariatePoly([0, 0, -27])
    f2disc = discriminant_y(cg.f2())
    x = UnivariatePoly.x()
    l = cg.l_poly()
    assert f2disc == 4 * x * (l * l - x) ** 2


@pytest.mark.parametrize("name", sorted(cg.IDENTITIES))
def test_identities(name):
    assert cg.verify_identity(name)


def test_identity_unknown():
    with pytest.raises(KeyError):
        cg.verify_identity("nope")


def test_parametrization_against_sympy():
    xt = T / (T ** 3 + 1)
    yt = 1 / (T ** 3 + 1) ** 2
    f1 = -yt ** 3 + yt ** 2 - 2 * xt ** 3 * yt + xt ** 6
    assert sympy.simplify(f1) == 0


def test_section_component():
    with pytest.raises(SectionError):
        cg.restrict_to_section(cg.f2(), SectionCoeffs.of(-1, F(3, 2), F(3, 16)))


def test_tangent_section_from_text():
    r = cg.verify_family("tangent", {"t": 1, "a": 0})
    assert r.passed
    assert (r.section.b, r.section.c) == (QQ(3), QQ(F(-5, 4)))
    assert [(p.x, p.actual) for p in r.points] == [(QQ(F(1, 2)), 2)]


def test_tangent_at_infinity_branch():
    r = cg.verify_family("tangent", {"t": -1, "a": 1})
    assert r.passed and r.at_infinity >= 2
    with pytest.raises(cg.ExclusionError):
        cg.verify_family("tangent", {"t": -1, "a": 0})


def test_inflection_profile():
    r = cg.verify_family("inflection", {"t": F(1, 2)})
    prof = {}
    g = r.restricted
    for x0 in (F(4, 9), F(0), F(12, 19)):
        prof[x0] = cg.multiplicity_at(g, QQ(x0))
    assert prof == {F(4, 9): 3, F(0): 2, F(12, 19): 1}


def test_wrong_expectation_fails():
    r = cg.verify_family("inflection", {"t": F(1, 2)}, expected={F(4, 9): 4})
    assert not r.passed


@pytest.mark.parametrize("name", sorted(cg.FAMILIES))
def test_families_sampled(name):
    reports = cg.sample_family(name, 5, seed=11)
    assert reports and all(r.passed for r in reports)
    assert all(r.total == 6 for r in reports)


def test_bitangent_exclusions():
    for t in (0, F(-3, 2), -1, F(1, 2)):
        with pytest.raises(cg.ExclusionError):
            cg.verify_family("b2-bitangent", {"t": t})


def test_missing_params():
    with pytest.raises(ValueError):
        cg.verify_family("tangent", {"t": 1})
