"""Extended natural numbers: nonnegative integers plus a single infinity.

All distances in this package are values of this type -- never floats.
Infinity absorbs addition and compares greater than every finite value.
"""

from __future__ import annotations

import functools

from .errors import InputError


@functools.total_ordering
class ExtendedNat:
    __slots__ = ("value",)

    def __init__(self, value: int | None = None):
        if value is not None:
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise InputError(f"ExtendedNat requires a nonnegative int, got {value!r}")
        self.value = value

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @staticmethod
    def _coerce(other) -> "ExtendedNat":
        if isinstance(other, ExtendedNat):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return ExtendedNat(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            return INFINITY
        return ExtendedNat(self.value + other.value)

    __radd__ = __add__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.value < other.value

    def __hash__(self):
        return hash(("ExtendedNat", self.value))

    def __int__(self):
        if self.is_infinite:
            raise InputError("cannot convert infinity to int")
        return self.value

    def __repr__(self):
        return "ExtendedNat(inf)" if self.is_infinite else f"ExtendedNat({self.value})"

    def __str__(self):
        return "inf" if self.is_infinite else str(self.value)


INFINITY = ExtendedNat(None)
