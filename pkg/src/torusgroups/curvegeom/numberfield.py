"""Simple number fields ``Q(theta) = Q[x]/(m(x))`` with exact rational arithmetic.

The minimal polynomial is trusted to be irreducible; nothing checks it.
``QQ`` is the degree-one field used for plain rational work.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Rational = Union[int, Fraction]


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(a: list, b: list):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lb = b[-1]
    while len(_trim(a)) >= len(b):
        k = len(a) - len(b)
        f = a[-1] / lb
        q[k] = f
        for i, bc in enumerate(b):
            a[k + i] -= f * bc
        a.pop()
    return q, a


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


class NumberField:
    """``Q[x]/(minpoly)``; ``minpoly`` is a monic integer list, constant term first."""

    def __init__(self, minpoly: Sequence[int], name: str = "theta"):
        m = [int(c) for c in minpoly]
        _trim(m)
        if len(m) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if m[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        if len(m) - 1 > 6:
            raise ValueError("degree must be at most 6")
        self.minpoly: Tuple[int, ...] = tuple(m)
        self.degree = len(m) - 1
        self.name = name

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def __repr__(self) -> str:
        if self.degree == 1 and self.minpoly == (0, 1):
            return "QQ"
        return f"NumberField({list(self.minpoly)})"

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                if value.field.degree == 1:
                    return self([value.coeffs[0]])
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (int, Fraction)):
            return FieldElement(self, [Fraction(value)])
        if isinstance(value, str):
            return FieldElement(self, [Fraction(value)])
        return FieldElement(self, [Fraction(c) for c in value])

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self(-self.minpoly[0])
        return FieldElement(self, [Fraction(0), Fraction(1)])

    def zero(self) -> "FieldElement":
        return self(0)

    def one(self) -> "FieldElement":
        return self(1)


QQ = NumberField((0, 1), name="Q")


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Iterable[Rational]):
        c = [Fraction(x) for x in coeffs]
        m = [Fraction(x) for x in field.minpoly]
        if len(c) > field.degree:
            _, c = _poly_divmod(c, m)
        c = c + [Fraction(0)] * (field.degree - len(c))
        self.field = field
        self.coeffs: Tuple[Fraction, ...] = tuple(c[: field.degree])

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return other
            if other.field.degree == 1:
                return self.field([other.coeffs[0]])
            if self.field.degree == 1:
                return NotImplemented
            raise ValueError("cannot mix elements of different number fields")
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, _poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        if self.field.degree == 1:
            return FieldElement(self.field, [1 / self.coeffs[0]])
        # extended Euclid in Q[x]: s*a + t*m = 1
        a = _trim(list(self.coeffs))
        m = [Fraction(x) for x in self.field.minpoly]
        r0, r1 = m, a
        s0, s1 = [], [Fraction(1)]
        while _trim(list(r1)):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, _trim(r)
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant when minpoly is irreducible
        if len(_trim(list(r0))) != 1:
            raise ZeroDivisionError("element is a zero divisor; minimal polynomial is reducible")
        c = r0[0]
        return FieldElement(self.field, [x / c for x in s0])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if all(c == 0 for c in self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.field.minpoly, self.coeffs))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


_COEFF_LIST = re.compile(r"\[([^\]]*)\]")


def parse_minpoly(text: str) -> Tuple[int, ...]:
    """``x^3+4``, ``t^2+t+1`` or an integer list ``[4,0,0,1]`` (constant first)."""
    text = text.replace(" ", "")
    m = _COEFF_LIST.fullmatch(text)
    if m:
        return tuple(int(c) for c in m.group(1).split(","))
    terms = re.findall(r"([+-]?)(\d*)(?:\*?([a-z])(?:\^(\d+))?)?", text)
    coeffs: dict = {}
    consumed = ""
    for sign, num, var, power in terms:
        piece = sign + num + (var or "") + (("^" + power) if power else "")
        if not piece:
            continue
        consumed += piece
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        k = (int(power) if power else 1) if var else 0
        if not var and not num:
            raise ValueError(f"cannot parse polynomial {text!r}")
        coeffs[k] = coeffs.get(k, 0) + c
    if not coeffs:
        raise ValueError(f"cannot parse polynomial {text!r}")
    deg = max(coeffs)
    return tuple(coeffs.get(i, 0) for i in range(deg + 1))


def parse_element(text: str, field: NumberField = None) -> FieldElement:
    """Parse ``p/q`` (rational) or ``[c0,c1,...]/minpoly``."""
    text = text.strip()
    if text.startswith("["):
        close = text.index("]")
        coeffs = [Fraction(c) for c in text[1:close].split(",")]
        rest = text[close + 1:]
        if rest.startswith("/"):
            field = NumberField(parse_minpoly(rest[1:]))
        elif field is None:
            raise ValueError("field element needs a '/minpoly' suffix")
        return field(coeffs)
    value = Fraction(text)
    return (field or QQ)(value)
