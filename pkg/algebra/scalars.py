"""
Exact scalars over the two coefficient fields.

Real computations run over the rationals and complex ones over the Gaussian
rationals. Values are stored as elements of the sympy polynomial domains QQ
and QQ_I, which keep numerators and denominators as arbitrary precision
integers in lowest terms.
"""

import math
import operator
import re
from dataclasses import dataclass
from enum import Enum

from sympy.polys.domains import QQ, QQ_I

from .errors import DivisionByZero, FieldMismatch, ParseError


class Field(Enum):
    """Coefficient field tag: REAL models R by Q, COMPLEX models C by Q(i)."""

    REAL = "real"
    COMPLEX = "complex"

    @property
    def domain(self):
        return QQ if self is Field.REAL else QQ_I

    @property
    def symbol(self):
        return "R" if self is Field.REAL else "C"

    @classmethod
    def parse(cls, name):
        try:
            return cls(str(name).lower())
        except ValueError:
            raise ValueError(f"unknown field '{name}' (expected 'real' or 'complex')") from None


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


@dataclass(frozen=True)
class Scalar:
    """An exact field element tagged with its field."""

    field: Field
    value: object

    @classmethod
    def of(cls, field, re=0, im=0):
        """Build a scalar from rational parts; ints, (p, q) pairs and strings "p/q" are accepted."""
        re_part = _to_rational(re)
        im_part = _to_rational(im)
        if field is Field.REAL:
            if im_part:
                raise FieldMismatch("real scalars have no imaginary part")
            return cls(field, re_part)
        return cls(field, QQ_I(re_part, im_part))

    @classmethod
    def zero(cls, field):
        return cls(field, field.domain.zero)

    @classmethod
    def one(cls, field):
        return cls(field, field.domain.one)

    @classmethod
    def imaginary_unit(cls):
        return cls(Field.COMPLEX, QQ_I(0, 1))

    @property
    def re(self):
        return self.value if self.field is Field.REAL else self.value.x

    @property
    def im(self):
        return QQ.zero if self.field is Field.REAL else self.value.y

    def is_zero(self):
        return not self.value

    def __add__(self, other):
        return scalar_arith(self, other, "add")

    def __sub__(self, other):
        return scalar_arith(self, other, "sub")

    def __mul__(self, other):
        return scalar_arith(self, other, "mul")

    def __truediv__(self, other):
        return scalar_arith(self, other, "div")

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def __str__(self):
        return format_scalar(self.value, self.field)


def _to_rational(value):
    if isinstance(value, str):
        return _parse_rational(value.strip(), 0)
    if isinstance(value, tuple):
        num, den = value
        if den == 0:
            raise DivisionByZero("zero denominator")
        return QQ(num, den)
    return QQ.convert(value)


def _parse_rational(text, position):
    match = re.fullmatch(r"([+-]?\d+)(?:/(\d+))?", text)
    if not match:
        raise ParseError(f"malformed rational '{text}'", position)
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) else 1
    if den == 0:
        raise ParseError("zero denominator", position)
    return QQ(num, den)


def scalar_arith(a, b, op):
    """
    Exact field arithmetic on two scalars of the same field.

    Args:
        a: Left operand
        b: Right operand
        op: One of "add", "sub", "mul", "div"

    Returns:
        Scalar in canonical form
    """
    if a.field is not b.field:
        raise FieldMismatch(f"cannot combine {a.field.value} and {b.field.value} scalars")
    if op not in _OPS:
        raise ValueError(f"unknown scalar operation '{op}'")
    if op == "div" and not b.value:
        raise DivisionByZero(f"division of {a} by zero")
    return Scalar(a.field, _OPS[op](a.value, b.value))


def conjugate(a):
    """Complex conjugate; the identity on real scalars."""
    if a.field is Field.REAL:
        return a
    return Scalar(a.field, QQ_I(a.value.x, -a.value.y))


def _format_rational(q):
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def format_scalar(value, field):
    """Textual form of a raw domain element: "p", "p/q" or "a+b*i"."""
    if field is Field.REAL:
        return _format_rational(value)
    re_part, im_part = value.x, value.y
    if not im_part:
        return _format_rational(re_part)
    if im_part == 1:
        imag = "i"
    elif im_part == -1:
        imag = "-i"
    else:
        imag = f"{_format_rational(im_part)}*i"
    if not re_part:
        return imag
    sign = "" if imag.startswith("-") else "+"
    return f"{_format_rational(re_part)}{sign}{imag}"


_COMPLEX_PATTERN = re.compile(
    r"(?P<re>[+-]?\d+(?:/\d+)?)?(?:(?P<sign>[+-])?(?:(?P<im>\d+(?:/\d+)?)\*)?(?P<unit>i))?"
)


def parse_scalar(text, field):
    """Parse "p", "p/q" or, for complex scalars, "a+b*i" forms."""
    compact = "".join(str(text).split())
    if not compact:
        raise ParseError("empty scalar", 0)
    if field is Field.REAL:
        return Scalar(field, _parse_rational(compact, 0))
    match = _COMPLEX_PATTERN.fullmatch(compact)
    if not match or not (match.group("re") or match.group("unit")):
        raise ParseError(f"malformed complex scalar '{text}'", 0)
    re_part = _parse_rational(match.group("re"), 0) if match.group("re") else QQ.zero
    im_part = QQ.zero
    if match.group("unit"):
        im_part = _parse_rational(match.group("im"), 0) if match.group("im") else QQ.one
        if match.group("sign") == "-":
            im_part = -im_part
        elif match.group("re") and not match.group("sign"):
            raise ParseError(f"missing sign before imaginary part in '{text}'", 0)
    return Scalar(field, QQ_I(re_part, im_part))


def _rational_square_root(q):
    if q < 0:
        return None
    num, den = int(q.numerator), int(q.denominator)
    root_num, root_den = math.isqrt(num), math.isqrt(den)
    if root_num * root_num != num or root_den * root_den != den:
        return None
    return QQ(root_num, root_den)


def rational_sqrt(value, field):
    """
    Exact square root of a raw domain element inside its own field.

    Returns:
        A domain element w with w*w == value, or None when no such element exists
    """
    if field is Field.REAL:
        return _rational_square_root(value)
    a, b = value.x, value.y
    modulus = _rational_square_root(a * a + b * b)
    if modulus is None:
        return None
    x = _rational_square_root((modulus + a) / 2)
    y = _rational_square_root((modulus - a) / 2)
    if x is None or y is None:
        return None
    if b < 0:
        y = -y
    root = QQ_I(x, y)
    return root if root * root == value else None


def small_scalar(rng, field, bound=2):
    """Random scalar with small integer parts, drawn from a seeded random.Random."""
    re_part = rng.randint(-bound, bound)
    if field is Field.REAL:
        return QQ(re_part)
    return QQ_I(re_part, rng.randint(-bound, bound))
