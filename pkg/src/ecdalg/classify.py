"""Decision procedures for ECD group algebras and a construction method.

An ideal generated by an idempotent is "easily computable dimension" (ECD)
when its dimension is at most p = char(F_q): the dimension is then the least
positive residue of |G| * lambda_1(e) mod p.  The algebra is minimal-ECD
(every minimal ideal is ECD) exactly when the lcm of the q-orbit sizes is at
most p, which reduces the classification to integer arithmetic on one
maximal-order element.  Construction goes the other way: any divisor n != 1
of q^t - 1 with t <= p yields infinitely many groups of exponent n whose
algebras are minimal ECD.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import arith
from .abgroup import AbelianGroup, GroupElement, max_order_element
from .errors import InvalidRequest, NotASplittingDegree, PredicateMismatch
from .orbits import check_semisimple, is_splitting_degree, orbit_size_lcm

DEFAULT_MAX_GROUP_ORDER = 10_000
DEFAULT_MAX_RESULTS = 64

SPLITTING_DEGREE_CONDITION = "splitting_degree_le_p"
TOTIENT_CONDITION = "totient_le_p"
ELEMENTARY_ABELIAN_CONDITION = "elementary_abelian_bound"


@dataclass(frozen=True)
class ClassificationReport:
    """Everything the minimal-ECD decision looked at, for one (q, G)."""

    q: int
    p: int
    group_spec: str
    order: int
    exponent: int
    lcm_orbit_size: int
    phi_exponent: int
    is_semisimple: bool
    is_ecd_algebra: bool
    is_minimal_ecd: bool
    sufficient_conditions_fired: tuple[str, ...]
    witness: GroupElement
    witness_orbit_size: int

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "group": self.group_spec,
            "order": self.order,
            "exponent": self.exponent,
            "lcm_orbit_size": self.lcm_orbit_size,
            "phi_exponent": self.phi_exponent,
            "is_semisimple": self.is_semisimple,
            "is_ecd_algebra": self.is_ecd_algebra,
            "is_minimal_ecd": self.is_minimal_ecd,
            "sufficient_conditions_fired": list(self.sufficient_conditions_fired),
            "witness": list(self.witness),
            "witness_orbit_size": self.witness_orbit_size,
        }


def is_ecd_algebra(q: int, group: AbelianGroup) -> bool:
    """Every nontrivial ideal ECD: exactly when |G| <= p + 1 and |G| != p."""
    p, _ = arith.prime_power_parts(q)
    return group.order <= p + 1 and group.order != p


def is_minimal_ecd(q: int, group: AbelianGroup) -> ClassificationReport:
    """Full classification report; minimal ECD iff lcm orbit size <= p."""
    p, _ = check_semisimple(q, group)
    l = orbit_size_lcm(q, group)
    phi_exp = arith.euler_phi(group.exponent)
    minimal = l <= p

    fired = []
    if l <= p:
        # t = l is a splitting degree, so the degree condition certifies.
        fired.append(SPLITTING_DEGREE_CONDITION)
    if phi_exp <= p:
        fired.append(TOTIENT_CONDITION)
    b_group = _same_prime_base(group)
    if b_group is not None:
        b, a = b_group
        if b ** (a - 1) * (b - 1) <= p:
            fired.append(ELEMENTARY_ABELIAN_CONDITION)

    witness = max_order_element(group)
    witness_t = arith.mul_order(q, group.exponent)
    if witness_t != l:
        raise PredicateMismatch(
            f"witness orbit size {witness_t} differs from lcm {l}"
        )
    if fired and not minimal:
        raise PredicateMismatch(
            f"a sufficient condition fired ({fired}) but l = {l} > p = {p}"
        )
    return ClassificationReport(
        q=q,
        p=p,
        group_spec=group.spec,
        order=group.order,
        exponent=group.exponent,
        lcm_orbit_size=l,
        phi_exponent=phi_exp,
        is_semisimple=True,
        is_ecd_algebra=is_ecd_algebra(q, group),
        is_minimal_ecd=minimal,
        sufficient_conditions_fired=tuple(fired),
        witness=witness,
        witness_orbit_size=witness_t,
    )


def _same_prime_base(group: AbelianGroup) -> tuple[int, int] | None:
    """(b, a) when G is a b-group of exponent b^a, else None."""
    f = arith.factorize(group.order)
    if len(f.factors) != 1:
        return None
    b = f.factors[0][0]
    a = arith.factorize(group.exponent).factors[0][1]
    return b, a


def sufficient_by_splitting_degree(q: int, group: AbelianGroup, t: int) -> bool:
    """Certify minimal ECD from a splitting degree t <= p.

    The degree must actually split F_q[G]; a non-splitting t is an error,
    a splitting t > p simply fails to certify (returns False).
    """
    p, _ = check_semisimple(q, group)
    if not is_splitting_degree(q, group, t).holds:
        raise NotASplittingDegree(
            f"F_{q}^{t} is not a splitting field for exponent {group.exponent}"
        )
    return t <= p


def sufficient_by_totient(q: int, group: AbelianGroup) -> bool:
    """Certify minimal ECD from phi(exp(G)) <= p."""
    p, _ = check_semisimple(q, group)
    return arith.euler_phi(group.exponent) <= p


def sufficient_elementary_abelian(q: int, b: int, alpha_g: int) -> bool:
    """The totient certificate specialized to b-groups of exponent b^alpha_g."""
    if not arith.is_prime(b):
        raise ValueError(f"{b} is not prime")
    p, _ = arith.prime_power_parts(q)
    if b == p:
        raise ValueError(f"group prime {b} equals field characteristic {p}")
    if alpha_g < 1:
        raise ValueError(f"alpha_g must be >= 1, got {alpha_g}")
    return b ** (alpha_g - 1) * (b - 1) <= p


@dataclass(frozen=True)
class ConstructionRequest:
    """Parameters for the minimal-ECD construction sweep.

    ``max_results`` limits the number of groups emitted per exponent
    divisor; ``max_group_order`` bounds every emitted group's order.
    """

    p: int
    alpha: int
    t: int
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER
    max_results: int = DEFAULT_MAX_RESULTS

    @property
    def q(self) -> int:
        return self.p ** self.alpha

    def validate(self) -> None:
        if not arith.is_prime(self.p):
            raise InvalidRequest(f"{self.p} is not prime")
        if self.alpha < 1 or self.t < 1:
            raise InvalidRequest("alpha and t must be >= 1")
        if self.q == 2:
            raise InvalidRequest("q = 2 is excluded by the construction method")
        if self.t > self.p:
            raise InvalidRequest(f"t = {self.t} > p = {self.p} gives no certificate")


@dataclass(frozen=True)
class ConstructedAlgebra:
    """One group from the construction, with its certificate."""

    group: AbelianGroup
    exponent: int
    certificate: dict


def construct_minimal_ecd(req: ConstructionRequest) -> list[ConstructedAlgebra]:
    """Groups G with F_q[G] minimal ECD, from divisors of q^t - 1.

    For every divisor n != 1 of q^t - 1 (with t <= p), any abelian group of
    exponent exactly n works.  Per divisor this emits the factor multisets
    of exponent exactly n (at least one factor of order s^e for each prime
    power s^e dividing n exactly) within the order cap, lexicographically,
    up to max_results; every output is re-checked with is_minimal_ecd.
    """
    req.validate()
    q = req.q
    target = q ** req.t - 1
    divs = arith.divisors(arith.factorize(target))
    results: list[ConstructedAlgebra] = []
    for n in divs[1:]:
        if n > req.max_group_order:
            continue
        profiles = _exponent_profiles(n, req.max_group_order, req.max_results)
        for factors in profiles:
            group = AbelianGroup(factors)
            certificate = {
                "n": n,
                "t": req.t,
                "p": req.p,
                "divides": "q^t-1",
                "condition": "corollary-splitting-degree",
            }
            report = is_minimal_ecd(q, group)
            if not report.is_minimal_ecd:
                raise PredicateMismatch(
                    f"constructed group {group.spec} is not minimal ECD"
                )
            results.append(ConstructedAlgebra(group, n, certificate))
    return results


def _exponent_profiles(n: int, max_order: int, max_results: int) -> list[tuple[int, ...]]:
    """Factor multisets of abelian groups of exponent exactly n, order-capped.

    Mandatory: one factor s^e per prime power s^e exactly dividing n (the
    cyclic C_n profile up to CRT); extras: any prime powers s^j with j <= e.
    """
    prime_powers = [(s, e) for s, e in arith.factorize(n).factors]
    mandatory = [s ** e for s, e in prime_powers]
    budget = max_order // n
    extras_pool = [s ** j for s, e in prime_powers for j in range(1, e + 1)]
    extras: list[tuple[int, ...]] = []

    def grow(start: int, chosen: list[int], product: int) -> None:
        extras.append(tuple(chosen))
        if len(extras) > 100_000:
            raise PredicateMismatch("profile enumeration exploded")
        for i in range(start, len(extras_pool)):
            v = extras_pool[i]
            if product * v <= budget:
                chosen.append(v)
                grow(i, chosen, product * v)
                chosen.pop()

    grow(0, [], 1)
    profiles = sorted(
        (tuple(sorted(mandatory + list(e))) for e in extras),
        key=lambda f: (math.prod(f), f),
    )
    return profiles[:max_results]
