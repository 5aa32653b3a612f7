"""Dense univariate and bivariate polynomials over a :class:`NumberField`.

``UnivariatePoly`` stores coefficients constant term first with the leading
coefficient nonzero (the zero polynomial has no coefficients).
``BivariatePoly`` is a polynomial in ``y`` whose coefficients are
``UnivariatePoly`` values in ``x``.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

from .numberfield import QQ, FieldElement, NumberField


class PolyError(ValueError):
    pass


def _common_field(*fields: NumberField) -> NumberField:
    out = QQ
    for f in fields:
        if f == QQ:
            continue
        if out != QQ and out != f:
            raise PolyError("polynomials over different number fields")
        out = f
    return out


class UnivariatePoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs: Iterable = (), field: NumberField = None):
        raw = list(coeffs)
        if field is None:
            field = _common_field(*[c.field for c in raw if isinstance(c, FieldElement)])
        cs = [field(c) for c in raw]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs: Tuple[FieldElement, ...] = tuple(cs)

    # construction helpers
    @classmethod
    def x(cls, field: NumberField = QQ) -> "UnivariatePoly":
        return cls([0, 1], field)

    @classmethod
    def const(cls, c, field: NumberField = None) -> "UnivariatePoly":
        return cls([c], field)

    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def lc(self) -> FieldElement:
        if not self.coeffs:
            raise PolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero()

    def _lift(self, other) -> "UnivariatePoly":
        if isinstance(other, UnivariatePoly):
            return other
        f = other.field if isinstance(other, FieldElement) else QQ
        return UnivariatePoly([other], _common_field(self.field, f))

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        f = _common_field(self.field, o.field)
        return UnivariatePoly([f(self.coeff(i)) + f(o.coeff(i)) for i in range(n)], f)

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePoly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        f = _common_field(self.field, o.field)
        if not self.coeffs or not o.coeffs:
            return UnivariatePoly([], f)
        out = [f.zero()] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UnivariatePoly(out, f)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative power of a polynomial")
        out = UnivariatePoly([1], self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "UnivariatePoly"):
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = _common_field(self.field, o.field)
        rem = [f(c) for c in self.coeffs]
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return UnivariatePoly([], f), UnivariatePoly(rem, f)
        q = [f.zero()] * (dq + 1)
        inv_lc = o.lc().inverse()
        for k in range(dq, -1, -1):
            c = rem[k + len(o.coeffs) - 1] * inv_lc
            q[k] = c
            if c.is_zero():
                continue
            for i, b in enumerate(o.coeffs):
                rem[k + i] = rem[k + i] - c * b
        return UnivariatePoly(q, f), UnivariatePoly(rem[: len(o.coeffs) - 1], f)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other) -> "UnivariatePoly":
        q, r = self.divmod(other)
        if r:
            raise PolyError("division is not exact")
        return q

    def __call__(self, x0):
        acc = self.field.zero() if not isinstance(x0, FieldElement) else x0.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def compose(self, inner: "UnivariatePoly") -> "UnivariatePoly":
        acc = UnivariatePoly([], _common_field(self.field, inner.field))
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> "UnivariatePoly":
        return UnivariatePoly([c * i for i, c in enumerate(self.coeffs)][1:], self.field)

    def monic(self) -> "UnivariatePoly":
        inv = self.lc().inverse()
        return UnivariatePoly([c * inv for c in self.coeffs], self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnivariatePoly):
            if isinstance(other, (int, FieldElement)) or hasattr(other, "denominator"):
                other = self._lift(other)
            else:
                return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash(tuple(hash(c) for c in self.coeffs))

    def __repr__(self) -> str:
        return f"UnivariatePoly({self})"

    def __str__(self) -> str:
        return format_poly(self, "x")


def format_poly(p: UnivariatePoly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree(), -1, -1):
        c = p.coeffs[i]
        if c.is_zero():
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        cs = str(c)
        if mono and cs == "1":
            terms.append(mono)
        elif mono and cs == "-1":
            terms.append("-" + mono)
        else:
            terms.append(cs + ("*" + mono if mono else ""))
    return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(a: UnivariatePoly, b: UnivariatePoly) -> UnivariatePoly:
    while b:
        a, b = b, a % b
    return a.monic() if a else a


class BivariatePoly:
    """``sum_j c_j(x) y^j``; ``ycoeffs[j]`` is a :class:`UnivariatePoly`."""

    __slots__ = ("field", "ycoeffs")

    def __init__(self, ycoeffs: Sequence[UnivariatePoly], field: NumberField = None):
        cs = list(ycoeffs)
        if field is None:
            field = _common_field(*[c.field for c in cs]) if cs else QQ
        cs = [UnivariatePoly(c.coeffs, field) for c in cs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.ycoeffs: Tuple[UnivariatePoly, ...] = tuple(cs)

    @classmethod
    def from_terms(cls, terms: Dict[Tuple[int, int], object], field: NumberField = QQ):
        """Build from ``{(i, j): c}`` meaning ``c x^i y^j``."""
        if not terms:
            return cls([], field)
        ydeg = max(j for _, j in terms)
        rows: List[list] = [[] for _ in range(ydeg + 1)]
        for (i, j), c in terms.items():
            row = rows[j]
            while len(row) <= i:
                row.append(0)
            row[i] = row[i] + field(c)
        return cls([UnivariatePoly(r, field) for r in rows], field)

    @classmethod
    def y(cls, field: NumberField = QQ) -> "BivariatePoly":
        return cls([UnivariatePoly([], field), UnivariatePoly([1], field)], field)

    @classmethod
    def of_x(cls, p: UnivariatePoly) -> "BivariatePoly":
        return cls([p], p.field)

    def ydegree(self) -> int:
        return len(self.ycoeffs) - 1

    def is_zero(self) -> bool:
        return not self.ycoeffs

    def _lift(self, other) -> "BivariatePoly":
        if isinstance(other, BivariatePoly):
            return other
        if isinstance(other, UnivariatePoly):
            return BivariatePoly([other], other.field)
        return BivariatePoly([UnivariatePoly([other], self.field)], self.field)

    def __add__(self, other):
        o = self._lift(other)
        f = _common_field(self.field, o.field)
        n = max(len(self.ycoeffs), len(o.ycoeffs))
        zero = UnivariatePoly([], f)
        out = []
        for j in range(n):
            a = self.ycoeffs[j] if j < len(self.ycoeffs) else zero
            b = o.ycoeffs[j] if j < len(o.ycoeffs) else zero
            out.append(a + b)
        return BivariatePoly(out, f)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly([-c for c in self.ycoeffs], self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        f = _common_field(self.field, o.field)
        if self.is_zero() or o.is_zero():
            return BivariatePoly([], f)
        out = [UnivariatePoly([], f) for _ in range(len(self.ycoeffs) + len(o.ycoeffs) - 1)]
        for i, a in enumerate(self.ycoeffs):
            for j, b in enumerate(o.ycoeffs):
                out[i + j] = out[i + j] + a * b
        return BivariatePoly(out, f)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = BivariatePoly([UnivariatePoly([1], self.field)], self.field)
        for _ in range(n):
            out = out * self
        return out

    def dy(self) -> "BivariatePoly":
        return BivariatePoly([c * j for j, c in enumerate(self.ycoeffs)][1:], self.field)

    def subs_y(self, s: UnivariatePoly) -> UnivariatePoly:
        """``f(x, s(x))``."""
        acc = UnivariatePoly([], _common_field(self.field, s.field))
        for c in reversed(self.ycoeffs):
            acc = acc * s + c
        return acc

    def subs_y_bivariate(self, s: "BivariatePoly") -> "BivariatePoly":
        """``f(x, s(x, y))``."""
        acc = BivariatePoly([], _common_field(self.field, s.field))
        for c in reversed(self.ycoeffs):
            acc = acc * s + BivariatePoly([c], c.field)
        return acc

    def subs_x(self, p: UnivariatePoly) -> "BivariatePoly":
        """``f(p(x), y)``."""
        return BivariatePoly([c.compose(p) for c in self.ycoeffs])

    def scale_y(self, k) -> "BivariatePoly":
        """``f(x, k y)``."""
        f = self.field
        return BivariatePoly([c * (f(k) ** j) for j, c in enumerate(self.ycoeffs)], f)

    def terms(self) -> Dict[Tuple[int, int], FieldElement]:
        out = {}
        for j, c in enumerate(self.ycoeffs):
            for i, a in enumerate(c.coeffs):
                if not a.is_zero():
                    out[(i, j)] = a
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.terms() == other.terms()

    def __hash__(self) -> int:
        return hash(tuple(sorted((k, hash(v)) for k, v in self.terms().items())))

    def __repr__(self) -> str:
        return f"BivariatePoly({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for j in range(self.ydegree(), -1, -1):
            c = self.ycoeffs[j]
            if c.is_zero():
                continue
            mono = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            parts.append(f"({c})" + ("*" + mono if mono else ""))
        return " + ".join(parts)


def _det_bareiss(m: List[List[UnivariatePoly]]) -> UnivariatePoly:
    """Fraction-free determinant over ``K[x]`` (all divisions exact)."""
    n = len(m)
    if n == 0:
        raise PolyError("empty matrix")
    field = m[0][0].field
    a = [row[:] for row in m]
    sign = 1
    prev = UnivariatePoly([1], field)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return UnivariatePoly([], field)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def resultant_y(f: BivariatePoly, g: BivariatePoly) -> UnivariatePoly:
    """Resultant with respect to ``y``: determinant of the Sylvester matrix."""
    m, n = f.ydegree(), g.ydegree()
    if m < 1 or n < 0:
        raise PolyError("resultant needs positive y-degree")
    field = _common_field(f.field, g.field)
    zero = UnivariatePoly([], field)
    size = m + n
    rows = []
    fc = list(reversed(f.ycoeffs))  # leading first
    gc = list(reversed(g.ycoeffs))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - i - len(fc)))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - i - len(gc)))
    return _det_bareiss(rows)


def discriminant_y(f: BivariatePoly) -> UnivariatePoly:
    """Discriminant of a cubic in ``y``.

    Normalized as ``(-1)^(n(n-1)/2) Res(f, f_y) / lc(f)`` with ``n = 3``, i.e.
    ``-Res(f, f_y)/lc(f)``, which is the classical discriminant
    (``y^3 + c`` gives ``-27 c^2``).  ``lc(f)`` must be a nonzero constant.
    """
    if f.ydegree() != 3:
        raise PolyError(f"discriminant_y needs y-degree 3, got {f.ydegree()}")
    lead = f.ycoeffs[3]
    if lead.degree() != 0:
        raise PolyError("leading y-coefficient must be a nonzero constant")
    res = resultant_y(f, f.dy())
    return (-res) * lead.coeffs[0].inverse()
