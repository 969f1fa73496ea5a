"""Finite abelian groups in invariant-factor form."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from math import prod

from sympy import factorint


@dataclass(frozen=True)
class AbelianGroup:
    """The group Z/d1 x Z/d2 x ... with d1 | d2 | ... and every d_i >= 2.

    Examples:
        >>> AbelianGroup.from_cyclic_orders([2, 2, 4])
        AbelianGroup(factors=(2, 2, 4))
        >>> AbelianGroup.from_cyclic_orders([2, 3]).factors
        (6,)
    """

    factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(int(d) for d in self.factors))
        if any(d < 2 for d in self.factors):
            raise ValueError(f"invariant factors must be >= 2, got {self.factors}")
        for d, e in zip(self.factors, self.factors[1:], strict=False):
            if e % d:
                raise ValueError(f"invariant factors must form a divisibility chain, got {self.factors}")

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> AbelianGroup:
        """Normalize any product of cyclic groups to invariant factors.

        Orders equal to 1 are dropped; 0 is rejected since the group must be finite.
        """
        exponents: dict[int, list[int]] = defaultdict(list)
        for order in orders:
            order = abs(int(order))
            if order == 0:
                raise ValueError("infinite cyclic factor in a finite group")
            for p, e in factorint(order).items():
                exponents[int(p)].append(int(e))
        length = max((len(es) for es in exponents.values()), default=0)
        factors = [1] * length
        for p, es in exponents.items():
            es.sort(reverse=True)
            for k, e in enumerate(es):
                factors[length - 1 - k] *= p**e
        return cls(tuple(d for d in factors if d > 1))

    @classmethod
    def elementary(cls, p: int, rank: int) -> AbelianGroup:
        """(Z/p)^rank."""
        return cls((p,) * rank)

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def primary_exponents(self) -> dict[int, list[int]]:
        """For every prime p, the p-exponents of the cyclic factors, descending."""
        exponents: dict[int, list[int]] = defaultdict(list)
        for d in self.factors:
            for p, e in factorint(d).items():
                exponents[int(p)].append(int(e))
        return {p: sorted(es, reverse=True) for p, es in sorted(exponents.items())}

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        parts = []
        for d in sorted(set(self.factors)):
            count = self.factors.count(d)
            parts.append(f"(Z/{d})^{count}" if count > 1 else f"Z/{d}")
        return " x ".join(parts)


def is_subquotient(a: AbelianGroup, b: AbelianGroup) -> bool:
    """Whether ``a`` is isomorphic to a quotient of a subgroup of ``b``.

    For finite abelian groups this holds iff, for every prime p and every
    k >= 1, ``a`` has at most as many cyclic factors of p-exponent >= k as ``b``.
    """
    a_exp = a.primary_exponents()
    b_exp = b.primary_exponents()
    for p, es in a_exp.items():
        other = b_exp.get(p, [])
        for k in range(1, es[0] + 1):
            if sum(1 for e in es if e >= k) > sum(1 for e in other if e >= k):
                return False
    return True
