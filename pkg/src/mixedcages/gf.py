"""Finite field arithmetic for the supported orders.

Two families cover every construction in the package: Z_q for prime q,
and GF(4). GF(4) uses fixed 4x4 lookup tables derived from the relation
a^2 = a + 1 over characteristic 2 (reduction modulo x^2 + x + 1), with
elements encoded 0 -> 0, 1 -> 1, a -> 2, a^2 -> 3.

The int-level functions (`f_add`, `f_mul`, ...) are the workhorses used
by the generators; :class:`FieldElement` wraps them with order checking
for callers that juggle several fields at once.
"""

from __future__ import annotations

from dataclasses import dataclass

GF4_ADD = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)
GF4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
GF4_INV = (None, 1, 3, 2)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_supported_order(q) -> bool:
    """True for the field orders this package implements: primes and 4."""
    return isinstance(q, int) and (q == 4 or is_prime(q))


def check_order(q: int) -> int:
    if not is_supported_order(q):
        raise ValueError(f"unsupported field order {q!r} (need a prime or 4)")
    return q


def check_value(v: int, q: int) -> int:
    if not isinstance(v, int) or not 0 <= v < q:
        raise ValueError(f"value {v!r} out of range for field of order {q}")
    return v


def f_add(q: int, a: int, b: int) -> int:
    if q == 4:
        return GF4_ADD[a][b]
    return (a + b) % q


def f_neg(q: int, a: int) -> int:
    if q == 4:
        return a  # characteristic 2
    return (-a) % q


def f_sub(q: int, a: int, b: int) -> int:
    return f_add(q, a, f_neg(q, b))


def f_mul(q: int, a: int, b: int) -> int:
    if q == 4:
        return GF4_MUL[a][b]
    return (a * b) % q


def f_inv(q: int, a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse")
    if q == 4:
        return GF4_INV[a]
    return pow(a, -1, q)


@dataclass(frozen=True)
class FieldElement:
    value: int
    order: int

    def __post_init__(self):
        check_order(self.order)
        check_value(self.value, self.order)

    def _same(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {other!r}")
        if other.order != self.order:
            raise ValueError(
                f"field order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(f_add(self.order, self.value, other.value), self.order)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(f_sub(self.order, self.value, other.value), self.order)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(f_mul(self.order, self.value, other.value), self.order)

    def __neg__(self) -> "FieldElement":
        return FieldElement(f_neg(self.order, self.value), self.order)

    def inv(self) -> "FieldElement":
        return FieldElement(f_inv(self.order, self.value), self.order)


def elements(q: int) -> list[FieldElement]:
    check_order(q)
    return [FieldElement(v, q) for v in range(q)]
