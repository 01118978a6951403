"""q-cyclotomic orbits of a finite abelian group and splitting-degree tests.

The Frobenius of the coefficient field acts on G by g -> g^q; the orbit of g
has size equal to the multiplicative order of q modulo o(g).  The lcm of all
orbit sizes equals the orbit size of any element of maximal order, which is
what makes the splitting-degree computations O(1) in |G|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import arith
from .abgroup import (
    DEFAULT_ENUMERATION_CAP,
    AbelianGroup,
    GroupElement,
    element_order,
    enumerate_elements,
)
from .errors import NotSemisimple, PredicateMismatch


def check_semisimple(q: int, group: AbelianGroup) -> tuple[int, int]:
    """Validate p = char(F_q) does not divide |G|; return (p, alpha)."""
    p, alpha = arith.prime_power_parts(q)
    if group.order % p == 0:
        raise NotSemisimple(
            f"char {p} divides |G| = {group.order}; group algebra is not semisimple"
        )
    return p, alpha


@dataclass(frozen=True)
class QOrbit:
    """One orbit under g -> g^q: representative, members in walk order, size."""

    representative: GroupElement
    members: tuple[GroupElement, ...]
    size: int

    def __post_init__(self) -> None:
        if self.size != len(self.members):
            raise ValueError("orbit size disagrees with member count")


@dataclass(frozen=True)
class OrbitPartition:
    """All q-orbits of a group, sorted by (size, representative rank)."""

    q: int
    group: AbelianGroup
    orbits: tuple[QOrbit, ...]
    lcm_size: int

    @property
    def sizes(self) -> list[int]:
        return [o.size for o in self.orbits]

    def size_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for o in self.orbits:
            hist[o.size] = hist.get(o.size, 0) + 1
        return dict(sorted(hist.items()))


def orbit_size(q: int, group: AbelianGroup, g: GroupElement) -> int:
    """Size of the q-orbit of g: multiplicative order of q mod o(g)."""
    check_semisimple(q, group)
    return arith.mul_order(q, element_order(group, g))


def q_orbit(q: int, group: AbelianGroup, g: GroupElement) -> QOrbit:
    """Explicit orbit of g by iterated q-th powering, cross-checked."""
    check_semisimple(q, group)
    members = [g]
    h = group.pow(g, q)
    while h != g:
        members.append(h)
        h = group.pow(h, q)
    # The walk length must match the number-theoretic size formula.
    assert len(members) == arith.mul_order(q, element_order(group, g))
    return QOrbit(min(members), tuple(members), len(members))


def orbit_partition(
    q: int, group: AbelianGroup, cap: int = DEFAULT_ENUMERATION_CAP
) -> OrbitPartition:
    """Partition of G into q-orbits via one visited-bitmap sweep."""
    check_semisimple(q, group)
    visited = bytearray(group.order)
    orbits: list[QOrbit] = []
    for start_rank, g in enumerate(enumerate_elements(group, cap)):
        if visited[start_rank]:
            continue
        members = [g]
        visited[start_rank] = 1
        h = group.pow(g, q)
        while h != g:
            visited[group.rank(h)] = 1
            members.append(h)
            h = group.pow(h, q)
        # Sweeping ranks in order makes the start the lexicographic least.
        orbits.append(QOrbit(g, tuple(members), len(members)))
    orbits.sort(key=lambda o: (o.size, group.rank(o.representative)))
    l = math.lcm(*(o.size for o in orbits))
    return OrbitPartition(q, group, tuple(orbits), l)


def orbit_size_lcm(q: int, group: AbelianGroup) -> int:
    """lcm of all q-orbit sizes, computed from one maximal-order witness.

    Any element w with o(w) = exp(G) has the largest orbit, and every other
    orbit size divides it, so no enumeration is needed.
    """
    check_semisimple(q, group)
    return arith.mul_order(q, group.exponent)


@dataclass(frozen=True)
class SplittingDegreeCheck:
    """Evidence record for the splitting-degree equivalence at degree t.

    The two integer predicates below are provably equivalent to each other
    and to the two constructive statements ("F_{q^t} is a splitting field",
    "F_{q^t} contains a primitive exp(G)-th root of unity"); the constructive
    side is exercised by ffield.primitive_root_of_unity.
    """

    q: int
    t: int
    exponent: int
    lcm_size: int
    lcm_divides_t: bool
    exponent_divides_qt_minus_1: bool

    @property
    def holds(self) -> bool:
        return self.lcm_divides_t

    def __bool__(self) -> bool:
        return self.holds


def is_splitting_degree(q: int, group: AbelianGroup, t: int) -> SplittingDegreeCheck:
    """Does F_{q^t} split F_q[G]?  Evaluates both integer criteria.

    q^t - 1 is reduced modulo exp(G) so the check stays within the integer
    budget for any t.
    """
    if t < 1:
        raise ValueError(f"extension degree must be >= 1, got {t}")
    check_semisimple(q, group)
    l = orbit_size_lcm(q, group)
    n = group.exponent
    by_lcm = t % l == 0
    by_exponent = pow(q, t, n) == 1 % n
    if by_lcm != by_exponent:
        raise PredicateMismatch(
            f"splitting predicates disagree for q={q}, t={t}, exp={n}: "
            f"l|t is {by_lcm} but exp|q^t-1 is {by_exponent}"
        )
    return SplittingDegreeCheck(q, t, n, l, by_lcm, by_exponent)


def minimal_splitting_degree(q: int, group: AbelianGroup) -> int:
    """Degree [F : F_q] of the minimal splitting field of F_q[G].

    Equals the lcm of the q-orbit sizes; the minimal splitting field is
    F_q adjoined a primitive exp(G)-th root of unity.
    """
    return orbit_size_lcm(q, group)
