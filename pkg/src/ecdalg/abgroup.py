"""Finite abelian groups as products of cyclic factors, multiplicative notation.

A group is a list of cyclic factor orders (C_{d1} x ... x C_{dk}); an element
is a tuple of exponents, one residue per factor, identity = all zeros.  The
mixed-radix rank of the exponent vector (first coordinate most significant)
gives a fixed bijection G <-> [0, |G|) used as the basis order everywhere.
"""

from __future__ import annotations

import math
import re
from functools import cached_property
from typing import Iterator, Sequence

from . import arith
from .errors import ElementShapeMismatch, GroupTooLarge

GroupElement = tuple[int, ...]

DEFAULT_ENUMERATION_CAP = 10 ** 7

_FACTOR_RE = re.compile(r"^[cC]?(\d+)$")


class AbelianGroup:
    """C_{d1} x ... x C_{dk} with the user-given factor list preserved.

    The canonical invariant-factor chain (d'_1 | d'_2 | ... | d'_m) is
    computed by CRT-splitting every factor into prime powers and regrouping,
    and is what group isomorphism tests should compare.
    """

    def __init__(self, factor_orders: Sequence[int]):
        factors = tuple(int(d) for d in factor_orders)
        if not factors:
            raise ValueError("a group needs at least one cyclic factor")
        if any(d < 2 for d in factors):
            raise ValueError(f"cyclic factor orders must be >= 2: {factors}")
        self.factor_orders = factors
        self.order = math.prod(factors)
        self.exponent = math.lcm(*factors)
        # Mixed-radix weights, first coordinate most significant.
        weights = [1] * len(factors)
        for i in range(len(factors) - 2, -1, -1):
            weights[i] = weights[i + 1] * factors[i + 1]
        self._weights = tuple(weights)

    # -- identity / comparison ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AbelianGroup)
            and self.factor_orders == other.factor_orders
        )

    def __hash__(self) -> int:
        return hash(self.factor_orders)

    def __repr__(self) -> str:
        return f"AbelianGroup({list(self.factor_orders)})"

    @property
    def spec(self) -> str:
        """Canonical display form, e.g. "C2xC16xC9xC3"."""
        return "x".join(f"C{d}" for d in self.factor_orders)

    @cached_property
    def invariant_factors(self) -> tuple[int, ...]:
        """Invariant-factor chain d'_1 | d'_2 | ... | d'_m, ascending."""
        by_prime: dict[int, list[int]] = {}
        for d in self.factor_orders:
            for p, m in arith.factorize(d).factors:
                by_prime.setdefault(p, []).append(p ** m)
        for powers in by_prime.values():
            powers.sort(reverse=True)
        depth = max(len(v) for v in by_prime.values())
        chain = []
        for j in range(depth):
            block = 1
            for powers in by_prime.values():
                if j < len(powers):
                    block *= powers[j]
            chain.append(block)
        chain.reverse()
        return tuple(chain)

    # -- element arithmetic ---------------------------------------------------

    def _check(self, g: GroupElement) -> None:
        if len(g) != len(self.factor_orders):
            raise ElementShapeMismatch(
                f"element has {len(g)} coordinates, group has "
                f"{len(self.factor_orders)} factors"
            )

    @property
    def identity(self) -> GroupElement:
        return (0,) * len(self.factor_orders)

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        self._check(g)
        self._check(h)
        return tuple((a + b) % d for a, b, d in zip(g, h, self.factor_orders))

    def inv(self, g: GroupElement) -> GroupElement:
        self._check(g)
        return tuple((-a) % d for a, d in zip(g, self.factor_orders))

    def pow(self, g: GroupElement, k: int) -> GroupElement:
        self._check(g)
        return tuple((a * k) % d for a, d in zip(g, self.factor_orders))

    def rank(self, g: GroupElement) -> int:
        self._check(g)
        return sum(a * w for a, w in zip(g, self._weights))

    def element_at(self, rank: int) -> GroupElement:
        if not 0 <= rank < self.order:
            raise ValueError(f"rank {rank} out of range [0, {self.order})")
        out = []
        for w, d in zip(self._weights, self.factor_orders):
            out.append((rank // w) % d)
        return tuple(out)


def element_order(group: AbelianGroup, g: GroupElement) -> int:
    """Order of g: lcm over coordinates of d_i / gcd(d_i, g_i)."""
    group._check(g)
    return math.lcm(
        *(d // math.gcd(d, a) for a, d in zip(g, group.factor_orders))
    )


def max_order_element(group: AbelianGroup) -> GroupElement:
    """A deterministic element of order exp(G).

    For each prime b dividing exp(G), the first factor C_d whose order
    carries the maximal power b^e contributes the component d / b^e; the
    components have pairwise coprime orders, so they accumulate to exp(G).
    """
    coords = [0] * len(group.factor_orders)
    for b, e in arith.factorize(group.exponent).factors:
        target = b ** e
        for i, d in enumerate(group.factor_orders):
            if d % target == 0:
                coords[i] += d // target
                break
    w = tuple(coords)
    assert element_order(group, w) == group.exponent
    return w


def enumerate_elements(
    group: AbelianGroup, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[GroupElement]:
    """All elements in lexicographic (= rank) order, identity first."""
    if group.order > cap:
        raise GroupTooLarge(f"|G| = {group.order} exceeds enumeration cap {cap}")
    factors = group.factor_orders
    current = [0] * len(factors)
    while True:
        yield tuple(current)
        i = len(factors) - 1
        while i >= 0:
            current[i] += 1
            if current[i] < factors[i]:
                break
            current[i] = 0
            i -= 1
        if i < 0:
            return


def cyclic_class(group: AbelianGroup, g: GroupElement) -> set[GroupElement]:
    """Generators of <g>: {g^k : gcd(k, o(g)) = 1}; size is phi(o(g))."""
    d = element_order(group, g)
    return {group.pow(g, k) for k in range(1, d + 1) if math.gcd(k, d) == 1}


def parse_group_spec(spec: str) -> AbelianGroup:
    """Parse "C2669" or "2x16x9x3" (case-insensitive, C prefix optional)."""
    text = spec.strip().replace("X", "x")
    if not text:
        raise ValueError("empty group spec")
    parts = text.split("x")
    orders = []
    for part in parts:
        m = _FACTOR_RE.match(part.strip())
        if not m:
            raise ValueError(f"unrecognized group spec {spec!r}")
        orders.append(int(m.group(1)))
    return AbelianGroup(orders)
