"""Decimal (SI) storage units and (low, high) interval arithmetic."""

from dataclasses import dataclass
from typing import Union

from ..errors import ValidationError

TB_PER_EB = 10**6

Number = Union[int, float]


def tb_to_eb(tb: Number) -> float:
    return tb / TB_PER_EB


def eb_to_tb(eb: Number) -> float:
    return eb * TB_PER_EB


@dataclass(frozen=True)
class Interval:
    """Closed range [low, high]. A point value has low == high."""

    low: float
    high: float

    def __post_init__(self):
        if self.low > self.high:
            raise ValidationError(f"Interval low {self.low} exceeds high {self.high}")

    @classmethod
    def point(cls, value: Number) -> "Interval":
        return cls(value, value)

    @classmethod
    def of(cls, value: "Interval | Number | tuple | list") -> "Interval":
        if isinstance(value, Interval):
            return value
        if isinstance(value, (tuple, list)):
            if len(value) == 1:
                return cls.point(value[0])
            if len(value) != 2:
                raise ValidationError(f"Interval needs one or two bounds, got {value!r}")
            return cls(value[0], value[1])
        return cls.point(value)

    @property
    def midpoint(self) -> float:
        return (self.low + self.high) / 2

    @property
    def is_point(self) -> bool:
        return self.low == self.high

    def scale(self, factor: Number) -> "Interval":
        if factor < 0:
            raise ValidationError("Intervals are only scaled by non-negative factors")
        return Interval(self.low * factor, self.high * factor)

    def __mul__(self, other: "Interval | Number") -> "Interval":
        # Operands are non-negative quantities, so bounds multiply pairwise.
        if isinstance(other, Interval):
            return Interval(self.low * other.low, self.high * other.high)
        return self.scale(other)

    __rmul__ = __mul__

    def __add__(self, other: "Interval | Number") -> "Interval":
        other = Interval.of(other)
        return Interval(self.low + other.low, self.high + other.high)

    __radd__ = __add__

    def map(self, fn) -> "Interval":
        """Apply a monotone nondecreasing function to both bounds."""
        return Interval(fn(self.low), fn(self.high))

    def contains(self, value: Number) -> bool:
        return self.low <= value <= self.high

    def as_tuple(self) -> tuple:
        return (self.low, self.high)

    def __str__(self) -> str:
        if self.is_point:
            return f"{self.low:g}"
        return f"{self.low:g}-{self.high:g}"
