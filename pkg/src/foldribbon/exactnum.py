"""Exact arithmetic in the quadratic field Q(sqrt(3)).

Every coordinate and length produced by the construction generators lives in
Q(sqrt(3)) because all construction angles are multiples of pi/6.  A value is
represented as ``a + b*sqrt(3)`` with ``a`` and ``b`` rational.  Comparisons,
square roots of perfect squares in the field, and conversion to float are all
exact (float conversion is correctly rounded to well below 1e-14 relative
error).  Square roots of field elements that are not perfect squares in the
field fall back to a flagged high-precision float approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

__all__ = [
    "ExactnumError",
    "Scalar",
    "Approx",
    "SymbolicLength",
    "SQRT3",
    "INV_SQRT3",
    "ZERO",
    "ONE",
    "scalar",
    "scalar_sqrt",
    "scalar_to_float",
    "scalar_floor",
    "scalar_ceil",
    "parse_scalar",
    "symlen_eval",
]


class ExactnumError(ValueError):
    """Raised for domain errors in exact arithmetic."""


# sqrt(3) as a rational accurate to ~60 digits, for float conversion.
_SQRT3_FRACTION = Fraction(isqrt(3 * 10**120), 10**60)

_RationalLike = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise ExactnumError(f"expected a rational value, got {type(x).__name__}")


@dataclass(frozen=True)
class Scalar:
    """An element ``a + b*sqrt(3)`` of Q(sqrt(3)) with rational a, b."""

    a: Fraction
    b: Fraction

    # -- construction -----------------------------------------------------
    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))

    @staticmethod
    def of(x: Union["Scalar", int, Fraction]) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return Scalar(_as_fraction(x), Fraction(0))

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other) -> "Scalar":
        o = Scalar.of(other)
        return Scalar(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.a, -self.b)

    def __sub__(self, other) -> "Scalar":
        return self + (-Scalar.of(other))

    def __rsub__(self, other) -> "Scalar":
        return Scalar.of(other) + (-self)

    def __mul__(self, other) -> "Scalar":
        o = Scalar.of(other)
        return Scalar(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        # 1/(a + b sqrt3) = (a - b sqrt3) / (a^2 - 3 b^2)
        norm = self.a * self.a - 3 * self.b * self.b
        if norm == 0:
            raise ExactnumError("zero divisor")
        return Scalar(self.a / norm, -self.b / norm)

    def __truediv__(self, other) -> "Scalar":
        return self * Scalar.of(other).inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.of(other) * self.inverse()

    # -- predicates and comparison ------------------------------------------
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(3)."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Mixed signs: compare a^2 with 3 b^2; the term with larger square
        # magnitude determines the sign.
        if a * a > 3 * b * b:
            return (a > 0) - (a < 0)
        if a * a < 3 * b * b:
            return (b > 0) - (b < 0)
        return 0  # a^2 == 3 b^2 is impossible for nonzero rationals, but keep safe

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Scalar)):
            o = Scalar.of(other)
            return self.a == o.a and self.b == o.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, other) -> bool:
        return (self - Scalar.of(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - Scalar.of(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - Scalar.of(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - Scalar.of(other)).sign() >= 0

    def __abs__(self) -> "Scalar":
        return -self if self.sign() < 0 else self

    # -- conversion and formatting -------------------------------------------
    def to_float(self) -> float:
        return float(self.a + self.b * _SQRT3_FRACTION)

    __float__ = to_float

    def text(self) -> str:
        """Canonical text form ``a+b*sqrt3`` with reduced fractions."""
        sign = "+" if self.b >= 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*sqrt3"

    def __repr__(self):
        return f"Scalar({self.text()})"


ZERO = Scalar(Fraction(0), Fraction(0))
ONE = Scalar(Fraction(1), Fraction(0))
SQRT3 = Scalar(Fraction(0), Fraction(1))
INV_SQRT3 = Scalar(Fraction(0), Fraction(1, 3))  # 1/sqrt(3) = sqrt(3)/3


def scalar(a, b=0) -> Scalar:
    """Convenience constructor: scalar(a, b) == a + b*sqrt(3)."""
    return Scalar(_as_fraction(a), _as_fraction(b))


@dataclass(frozen=True)
class Approx:
    """A flagged non-exact numeric value (fallback for sqrt outside the field)."""

    value: float

    def to_float(self) -> float:
        return self.value

    __float__ = to_float

    def __repr__(self):
        return f"Approx({self.value!r})"


def _rational_sqrt(q: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def scalar_sqrt(x: Union[Scalar, int, Fraction]):
    """Square root of a nonnegative field element.

    Returns an exact Scalar when the root lies in Q(sqrt(3)); otherwise a
    flagged Approx whose value is accurate to double precision.
    """
    s = Scalar.of(x)
    if s.sign() < 0:
        raise ExactnumError("negative radicand")
    if s.is_zero():
        return ZERO
    a, b = s.a, s.b
    if b == 0:
        r = _rational_sqrt(a)
        if r is not None:
            return Scalar(r, Fraction(0))
        r = _rational_sqrt(a / 3)
        if r is not None:
            return Scalar(Fraction(0), r)
    else:
        # Solve (p + q sqrt3)^2 = a + b sqrt3:  p^2 + 3 q^2 = a, 2 p q = b.
        disc = _rational_sqrt(a * a - 3 * b * b)
        if disc is not None:
            for branch in ((a + disc) / 2, (a - disc) / 2):
                p = _rational_sqrt(branch)
                if p is not None and p != 0:
                    q = b / (2 * p)
                    cand = Scalar(p, q)
                    if cand.sign() > 0 and cand * cand == s:
                        return cand
                    cand = -cand
                    if cand.sign() > 0 and cand * cand == s:
                        return cand
    return Approx(math.sqrt(s.to_float()))


def scalar_to_float(x) -> float:
    if isinstance(x, (Scalar, Approx)):
        return x.to_float()
    return float(_as_fraction(x))


def scalar_floor(x: Union[Scalar, int, Fraction]) -> int:
    """Exact floor of a field element."""
    s = Scalar.of(x)
    n = math.floor(s.to_float())
    # Correct against float error with exact comparisons.
    while s < n:
        n -= 1
    while s >= n + 1:
        n += 1
    return n


def scalar_ceil(x: Union[Scalar, int, Fraction]) -> int:
    return -scalar_floor(-Scalar.of(x))


def parse_scalar(text: str) -> Scalar:
    """Parse the canonical form ``a+b*sqrt3`` (also accepts bare rationals)."""
    t = text.strip().replace(" ", "")
    if "sqrt3" not in t:
        return Scalar(Fraction(t), Fraction(0))
    head, _, _ = t.rpartition("*sqrt3")
    if not t.endswith("*sqrt3"):
        raise ExactnumError(f"cannot parse scalar: {text!r}")
    # Split head into the rational part and the sqrt3 coefficient: the
    # coefficient starts at the last '+' or '-' that is not inside a fraction
    # and not a leading sign.
    for i in range(len(head) - 1, 0, -1):
        if head[i] in "+-" and head[i - 1] not in "+-/":
            a_txt, sign, b_txt = head[:i], head[i], head[i + 1 :]
            b = Fraction(b_txt)
            return Scalar(Fraction(a_txt), -b if sign == "-" else b)
    # No rational part, e.g. "2/3*sqrt3" or "-1*sqrt3".
    return Scalar(Fraction(0), Fraction(head))


@dataclass(frozen=True)
class SymbolicLength:
    """A length of the form ``constant + coeff * d`` kept symbolic in d."""

    constant: Scalar
    d_coeff: Scalar

    def __add__(self, other: "SymbolicLength") -> "SymbolicLength":
        return SymbolicLength(self.constant + other.constant, self.d_coeff + other.d_coeff)

    def __sub__(self, other: "SymbolicLength") -> "SymbolicLength":
        return SymbolicLength(self.constant - other.constant, self.d_coeff - other.d_coeff)

    def scale(self, k) -> "SymbolicLength":
        return SymbolicLength(self.constant * k, self.d_coeff * k)

    def eval(self, d) -> Scalar:
        d = Scalar.of(d)
        if d.sign() <= 0:
            raise ExactnumError("invalid spacing")
        return self.constant + self.d_coeff * d

    def text(self) -> str:
        return f"({self.constant.text()}) + ({self.d_coeff.text()})*d"

    def __repr__(self):
        return f"SymbolicLength({self.text()})"


def symlen_eval(sym: SymbolicLength, d) -> Scalar:
    """Evaluate a symbolic length at spacing d (requires d > 0)."""
    return sym.eval(d)
