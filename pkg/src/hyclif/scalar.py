"""Exact arithmetic in the field Q(sqrt 2).

Every coefficient in the library is a Scalar: a value (p + q*sqrt(2))/r held
as three integers with r > 0 and gcd(p, q, r) == 1.  All operations are exact;
there is no floating-point mode anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Union

RatLike = Union[int, Fraction]


def _as_fraction(x: RatLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Scalar:
    """An element a + b*sqrt(2) with a, b arbitrary-precision rationals."""

    __slots__ = ("p", "q", "r")

    p: int  # rational-part numerator (over r)
    q: int  # sqrt(2)-part numerator (over r)
    r: int  # common denominator, > 0

    def __init__(self, rat: RatLike = 0, sqrt2: RatLike = 0) -> None:
        a = _as_fraction(rat)
        b = _as_fraction(sqrt2)
        den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        p = a.numerator * (den // a.denominator)
        q = b.numerator * (den // b.denominator)
        g = gcd(gcd(p, q), den)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)
        object.__setattr__(self, "r", den // g)

    @classmethod
    def _make(cls, p: int, q: int, r: int) -> Scalar:
        # fast path: build from raw integers, normalizing sign and gcd
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        if g > 1:
            p //= g
            q //= g
            r //= g
        self = object.__new__(cls)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        return self

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Scalar is immutable")

    # -- the two exact rational components ---------------------------------

    @property
    def rat_part(self) -> Fraction:
        return Fraction(self.p, self.r)

    @property
    def sqrt2_part(self) -> Fraction:
        return Fraction(self.q, self.r)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    def sign(self) -> int:
        """Exact sign of the real value: -1, 0, or +1."""
        p, q = self.p, self.q
        if q == 0:
            return 0 if p == 0 else (1 if p > 0 else -1)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # mixed signs: compare p^2 with 2 q^2 (equality impossible here)
        if p > 0:
            return 1 if p * p > 2 * q * q else -1
        return 1 if 2 * q * q > p * p else -1

    # -- ring/field operations --------------------------------------------

    def _coerce(self, other: object) -> "Scalar | None":
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other)
        return None

    def __add__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._make(self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r, self.r * o.r)

    __radd__ = __add__

    def __sub__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._make(self.p * o.r - o.p * self.r, self.q * o.r - o.q * self.r, self.r * o.r)

    def __rsub__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> Scalar:
        return Scalar._make(-self.p, -self.q, self.r)

    def __mul__(self, other: object) -> Scalar:
        if isinstance(other, int):
            return Scalar._make(self.p * other, self.q * other, self.r)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (p1 + q1 s)(p2 + q2 s) = p1 p2 + 2 q1 q2 + (p1 q2 + q1 p2) s
        return Scalar._make(
            self.p * o.p + 2 * self.q * o.q,
            self.p * o.q + self.q * o.p,
            self.r * o.r,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        """Multiplicative inverse; defined iff rat^2 - 2*sqrt2^2 != 0 (i.e. nonzero)."""
        norm = self.p * self.p - 2 * self.q * self.q
        if norm == 0:
            raise ZeroDivisionError("Scalar zero has no inverse")
        return Scalar._make(self.r * self.p, -self.r * self.q, norm)

    def __truediv__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> Scalar:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q and self.r == o.r

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.r))

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({self.rat_part}, {self.sqrt2_part})"

    def to_json(self) -> dict:
        return {"rat": format_rational(self.rat_part), "rat_r2": format_rational(self.sqrt2_part)}

    @classmethod
    def from_json(cls, obj: dict) -> Scalar:
        return cls(Fraction(obj["rat"]), Fraction(obj["rat_r2"]))


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _sqrt2_piece(b: Fraction) -> str:
    # magnitude-only piece for the sqrt(2) component, b > 0
    return "r2" if b == 1 else f"{format_rational(b)} r2"


def format_scalar(s: Scalar) -> str:
    """Canonical text of a Scalar: `p/q`, `r/s r2`, or `p/q+r/s r2`.

    The output re-parses in the expression grammar (a rational literal
    immediately followed by `r2` is one sqrt(2)-multiple literal).
    """
    a, b = s.rat_part, s.sqrt2_part
    if b == 0:
        return format_rational(a)
    if a == 0:
        return _sqrt2_piece(b) if b > 0 else "-" + _sqrt2_piece(-b)
    joiner = "+" if b > 0 else "-"
    return f"{format_rational(a)}{joiner}{_sqrt2_piece(abs(b))}"


ZERO = Scalar(0)
ONE = Scalar(1)
TWO = Scalar(2)
SQRT2 = Scalar(0, 1)
INV_SQRT2 = Scalar(0, Fraction(1, 2))  # 1/sqrt(2) = sqrt(2)/2
