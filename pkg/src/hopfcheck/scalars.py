"""Exact scalar fields: arbitrary-precision rationals and odd prime fields.

Every computation in this package runs over one of these fields.  Floating
point is never used; rationals stay canonical via fractions.Fraction and
prime-field elements stay reduced mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class ScalarError(ValueError):
    """Malformed scalar input, or arithmetic across different fields."""


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FpElement:
    """An element of the field with p elements, kept reduced mod p.

    Supports mixed arithmetic with plain ints (lifted mod p) but refuses
    floats and elements of a different prime field.
    """

    value: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.p)

    def _lift(self, other) -> "FpElement | None":
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ScalarError(f"mixed prime fields: F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return FpElement(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FpElement(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FpElement(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FpElement(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FpElement(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(self.value * pow(o.value, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.value == 0:
                raise ZeroDivisionError(f"zero has no negative power in F_{self.p}")
            return FpElement(pow(self.value, -n * (self.p - 2), self.p), self.p)
        return FpElement(pow(self.value, n, self.p), self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)


class RationalField:
    """The rationals; elements are fractions.Fraction."""

    name = "rationals"
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def parse(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool) or isinstance(value, float):
            raise ScalarError(f"exact rational expected, got {value!r}")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ScalarError(f"bad rational literal {value!r}") from exc
        raise ScalarError(f"exact rational expected, got {value!r}")

    def format(self, x) -> str:
        return str(x)

    def spec(self) -> dict:
        return {"type": "rationals"}

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("hopfcheck.QQ")


@dataclass(frozen=True)
class PrimeField:
    """The field with p elements, p an odd prime.

    p = 2 is rejected: halving coefficients must be possible, and the
    built-in examples all divide by two.
    """

    p: int

    def __post_init__(self) -> None:
        if not _is_odd_prime(self.p):
            raise ScalarError(f"prime field: p must be an odd prime, got {self.p}")

    @property
    def name(self) -> str:
        return f"prime field F_{self.p}"

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self.p)

    def from_int(self, n: int) -> FpElement:
        return FpElement(n, self.p)

    def parse(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise ScalarError(f"element of F_{value.p} given to F_{self.p}")
            return value
        q = QQ.parse(value)
        if q.denominator % self.p == 0:
            raise ScalarError(f"denominator of {value!r} vanishes mod {self.p}")
        return FpElement(q.numerator * pow(q.denominator, self.p - 2, self.p), self.p)

    def format(self, x: FpElement) -> str:
        return str(x.value)

    def spec(self) -> dict:
        return {"type": "prime", "p": self.p}


QQ = RationalField()

Scalar = Fraction | FpElement
Field = RationalField | PrimeField


def field_from_spec(spec) -> Field:
    """Build a field from its document form, e.g. {"type": "rationals"}."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise ScalarError(f"field: expected an object with a 'type', got {spec!r}")
    kind = spec["type"]
    if kind == "rationals":
        return QQ
    if kind == "prime":
        p = spec.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise ScalarError(f"field: prime field needs an integer 'p', got {spec!r}")
        return PrimeField(p)
    raise ScalarError(f"field: unknown type {kind!r}")
