"""The group algebra F_q[G]: convolution, idempotents, ideal dimensions.

An algebra element is a dense coefficient vector indexed by group-element
rank; coefficients are stored in the field's integer encoding.  Heavy
operations (convolution, Gaussian elimination, character sums) run on numpy
arrays with exp/log multiplication tables and digit-plane addition, which is
exact: every array entry is a field-element code or a prime-field digit.
Generic pure-Python versions of the same operations are kept for fields too
large to table and double as independent oracles in the tests.

Primitive idempotents are built through the character table of G over a
splitting field F_{q^l}: summing the character idempotents of one Frobenius
orbit of the dual group yields an idempotent with coefficients in F_q, and
the Frobenius orbits of the dual exponent vectors are computed by the same
routine as the orbits of G itself (the two groups are isomorphic).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import arith
from .abgroup import AbelianGroup, GroupElement
from .errors import (
    AlgebraMismatch,
    CoefficientNotRational,
    DimensionExceedsP,
    GroupTooLarge,
    NotIdempotent,
    NotSemisimple,
    PredicateMismatch,
)
from .ffield import FieldTower, field_tower, primitive_root_of_unity
from .orbits import QOrbit, check_semisimple, orbit_partition, orbit_size_lcm

DEFAULT_RANK_CAP = 4096
_TABLE_CAP = 1 << 16


@dataclass(frozen=True)
class AlgebraElement:
    """Element of F[G]: encoded field coefficients, one per group rank."""

    group: AbelianGroup
    field: object
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.group.order:
            raise AlgebraMismatch(
                f"{len(self.coeffs)} coefficients for a group of order "
                f"{self.group.order}"
            )

    def coefficient(self, g: GroupElement):
        """Decoded field coefficient at the basis element g."""
        return self.field.decode(self.coeffs[self.group.rank(g)])

    @property
    def lambda_1(self):
        """Coefficient at the group identity (rank 0)."""
        return self.field.decode(self.coeffs[0])

    def support_size(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_same_algebra(self, other)
        f = self.field
        out = tuple(
            f.encode(f.add(f.decode(a), f.decode(b)))
            for a, b in zip(self.coeffs, other.coeffs)
        )
        return AlgebraElement(self.group, self.field, out)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)

    def to_json_dict(self) -> dict:
        f = self.field
        return {
            "group": self.group.spec,
            "field": {"size": f.size, "char": f.char},
            "coeffs": [list(f.flat_coeffs(f.decode(c))) for c in self.coeffs],
        }


def _check_same_algebra(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.group != b.group or a.field != b.field:
        raise AlgebraMismatch("operands live in different group algebras")


# -- constructors -------------------------------------------------------------

def zero_element(group: AbelianGroup, field) -> AlgebraElement:
    return AlgebraElement(group, field, (0,) * group.order)


def basis_element(group: AbelianGroup, field, g: GroupElement) -> AlgebraElement:
    coeffs = [0] * group.order
    coeffs[group.rank(g)] = field.encode(field.one)
    return AlgebraElement(group, field, tuple(coeffs))


def identity_element(group: AbelianGroup, field) -> AlgebraElement:
    return basis_element(group, field, group.identity)


def from_coefficients(group: AbelianGroup, field, values) -> AlgebraElement:
    """Build from a mapping g -> field element or a rank-ordered sequence."""
    if isinstance(values, dict):
        coeffs = [0] * group.order
        for g, v in values.items():
            coeffs[group.rank(g)] = field.encode(v)
    else:
        coeffs = [field.encode(v) for v in values]
    return AlgebraElement(group, field, tuple(coeffs))


def uniform_idempotent(group: AbelianGroup, field) -> AlgebraElement:
    """|G|^-1 * sum of all basis elements (the trivial-character idempotent)."""
    if group.order % field.char == 0:
        raise NotSemisimple(
            f"char {field.char} divides |G| = {group.order}; "
            "the averaging element is not defined"
        )
    c = field.encode(field.inv(field.from_int(group.order)))
    return AlgebraElement(group, field, (c,) * group.order)


# -- cached group / field machinery -------------------------------------------

@lru_cache(maxsize=64)
def _group_tables(group: AbelianGroup) -> tuple[np.ndarray, np.ndarray]:
    """(mul, inv): mul[i, j] = rank(g_i * g_j); inv[i] = rank(g_i^-1)."""
    factors = group.factor_orders
    n = group.order
    exps = np.zeros((n, len(factors)), dtype=np.int64)
    weights = np.zeros(len(factors), dtype=np.int64)
    w = 1
    for i in range(len(factors) - 1, -1, -1):
        weights[i] = w
        w *= factors[i]
    ranks = np.arange(n, dtype=np.int64)
    for i, d in enumerate(factors):
        exps[:, i] = (ranks // weights[i]) % d
    mul = np.zeros((n, n), dtype=np.int64)
    for i, d in enumerate(factors):
        mul += ((exps[:, None, i] + exps[None, :, i]) % d) * weights[i]
    inv = np.zeros(n, dtype=np.int64)
    for i, d in enumerate(factors):
        inv += ((-exps[:, i]) % d) * weights[i]
    return mul, inv


class _FieldTables:
    """exp/log tables plus digit-plane helpers for one small field."""

    def __init__(self, field):
        q = field.size
        self.field = field
        self.q = q
        self.p = field.char
        self.digits = field.degree_over_prime
        self.ppows = self.p ** np.arange(self.digits, dtype=np.int64)
        gen = self._find_generator(field)
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        acc = field.one
        for i in range(q - 1):
            code = field.encode(acc)
            exp[i] = code
            exp[i + q - 1] = code
            log[code] = i
            acc = field.mul(acc, gen)
        if field.encode(acc) != field.encode(field.one):
            raise PredicateMismatch("generator does not have full order")
        self.exp = exp
        self.log = log

    @staticmethod
    def _find_generator(field):
        q = field.size
        if q == 2:
            return field.one
        parts = [(q - 1) // s for s in arith.factorize(q - 1).primes]
        rng = random.Random(f"algebra-generator:{q}")
        while True:
            candidate = field.decode(rng.randrange(1, q))
            if all(field.pow(candidate, m) != field.one for m in parts):
                return candidate

    # all array arguments and results hold field-element codes

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        da = (a[..., None] // self.ppows) % self.p
        db = (b[..., None] // self.ppows) % self.p
        return (((da + db) % self.p) * self.ppows).sum(axis=-1)

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        da = (a[..., None] // self.ppows) % self.p
        db = (b[..., None] // self.ppows) % self.p
        return (((da - db) % self.p) * self.ppows).sum(axis=-1)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv_codes(self, a: np.ndarray) -> np.ndarray:
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]


@lru_cache(maxsize=32)
def _field_tables(field) -> _FieldTables | None:
    if field.size > _TABLE_CAP:
        return None
    return _FieldTables(field)


# -- multiplication -----------------------------------------------------------

def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Convolution product: coefficient of k is sum over gh = k of a_g b_h."""
    _check_same_algebra(a, b)
    tables = _field_tables(a.field)
    if tables is None:
        return _multiply_generic(a, b)
    mul, inv = _group_tables(a.group)
    av = np.asarray(a.coeffs, dtype=np.int64)
    bv = np.asarray(b.coeffs, dtype=np.int64)
    n = a.group.order
    acc = np.zeros((n, tables.digits), dtype=np.int64)
    for start in range(0, n, 512):
        rows = np.nonzero(av[start : start + 512])[0] + start
        if rows.size == 0:
            continue
        bmat = bv[mul[inv[rows]]]                 # bmat[i, k] = b at g_i^-1 g_k
        prods = tables.mul(av[rows, None], bmat)  # row i: a_i * (g_i shift of b)
        acc += ((prods[..., None] // tables.ppows) % tables.p).sum(axis=0)
    out = ((acc % tables.p) * tables.ppows).sum(axis=-1)
    return AlgebraElement(a.group, a.field, tuple(int(v) for v in out))


def _multiply_generic(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    f = a.field
    group = a.group
    n = group.order
    av = [f.decode(c) for c in a.coeffs]
    bv = [f.decode(c) for c in b.coeffs]
    out = [f.zero] * n
    for i in range(n):
        if f.is_zero(av[i]):
            continue
        gi = group.element_at(i)
        for j in range(n):
            if f.is_zero(bv[j]):
                continue
            k = group.rank(group.mul(gi, group.element_at(j)))
            out[k] = f.add(out[k], f.mul(av[i], bv[j]))
    return AlgebraElement(group, f, tuple(f.encode(v) for v in out))


def is_idempotent(e: AlgebraElement) -> bool:
    return multiply(e, e) == e


# -- rank oracle ----------------------------------------------------------------

def ideal_dimension_oracle(
    e: AlgebraElement, rank_cap: int = DEFAULT_RANK_CAP
) -> int:
    """dim over F of the principal ideal F[G]e: rank of the translate matrix.

    Rows are the coefficient vectors of g*e for g in G; rank is computed by
    Gaussian elimination in exact field arithmetic.
    """
    group = e.group
    if group.order > rank_cap:
        raise GroupTooLarge(
            f"|G| = {group.order} exceeds the rank cap {rank_cap}"
        )
    tables = _field_tables(e.field)
    if tables is None:
        return _rank_generic(e)
    mul, inv = _group_tables(group)
    rows = np.asarray(e.coeffs, dtype=np.int64)[mul[inv]]
    return _rank_tables(rows, tables)


def _rank_tables(rows: np.ndarray, tables: _FieldTables) -> int:
    mat = rows.copy()
    nrows, ncols = mat.shape
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        pivots = np.nonzero(mat[r:, col])[0]
        if pivots.size == 0:
            continue
        pr = r + int(pivots[0])
        if pr != r:
            mat[[r, pr]] = mat[[pr, r]]
        pivot_row = tables.mul(
            np.full(ncols, tables.inv_codes(mat[r, col : col + 1])[0]), mat[r]
        )
        mat[r] = pivot_row
        below = mat[r + 1 :, col]
        nz = np.nonzero(below)[0]
        if nz.size:
            updates = tables.mul(below[nz, None], pivot_row[None, :])
            mat[r + 1 :][nz] = tables.sub(mat[r + 1 :][nz], updates)
        r += 1
    return r


def _rank_generic(e: AlgebraElement) -> int:
    f = e.field
    group = e.group
    n = group.order
    coeffs = [f.decode(c) for c in e.coeffs]
    rows = []
    for i in range(n):
        g_inv = group.inv(group.element_at(i))
        rows.append(
            [coeffs[group.rank(group.mul(g_inv, group.element_at(k)))] for k in range(n)]
        )
    rank = 0
    for col in range(n):
        pivot = next(
            (i for i in range(rank, len(rows)) if not f.is_zero(rows[i][col])), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        scale = f.inv(rows[rank][col])
        rows[rank] = [f.mul(scale, v) for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not f.is_zero(rows[i][col]):
                factor = rows[i][col]
                rows[i] = [
                    f.sub(v, f.mul(factor, w)) for v, w in zip(rows[i], rows[rank])
                ]
        rank += 1
    return rank


# -- primitive idempotents ------------------------------------------------------

@dataclass(frozen=True)
class MinimalIdealReport:
    """One minimal ideal: its dual-group orbit, idempotent and dimension."""

    orbit: QOrbit
    idempotent: AlgebraElement
    dimension: int
    oracle_dimension: int

    @property
    def oracle_verified(self) -> bool:
        return self.dimension == self.oracle_dimension


def primitive_idempotents(
    q: int,
    group: AbelianGroup,
    tower: FieldTower,
    rank_cap: int = DEFAULT_RANK_CAP,
) -> list[MinimalIdealReport]:
    """All primitive idempotents of F_q[G] with their ideal dimensions.

    ``tower`` must be a splitting tower for G over F_q (degree a multiple of
    the orbit-size lcm; ``splitting_tower`` builds the minimal one).  The
    construction: characters of G land in F_{q^l} via a primitive exp(G)-th
    root of unity; summing the character idempotents over one q-power orbit
    of dual exponent vectors produces an F_q idempotent.  Every coefficient
    is checked to lie in the embedded F_q, and every dimension is checked
    against the rank oracle.
    """
    check_semisimple(q, group)
    if tower.q != q:
        raise AlgebraMismatch(
            f"tower has base size {tower.q}, the algebra needs {q}"
        )
    if group.order > rank_cap:
        raise GroupTooLarge(f"|G| = {group.order} exceeds the rank cap {rank_cap}")
    n = group.exponent
    theta = primitive_root_of_unity(tower, n)
    ext = tower.ext
    depth = ext.degree_over_prime
    alpha = tower.base.degree_over_prime
    p = tower.p

    theta_digits = np.zeros((n, depth), dtype=np.int64)
    acc = ext.one
    for j in range(n):
        theta_digits[j] = ext.flat_coeffs(acc)
        acc = ext.mul(acc, theta)

    factors = group.factor_orders
    order = group.order
    mul_table, inv_perm = _group_tables(group)
    ranks = np.arange(order, dtype=np.int64)
    exps = np.zeros((order, len(factors)), dtype=np.int64)
    w = 1
    weights = [0] * len(factors)
    for i in range(len(factors) - 1, -1, -1):
        weights[i] = w
        w *= factors[i]
    for i, d in enumerate(factors):
        exps[:, i] = (ranks // weights[i]) % d
    char_weights = np.array([n // d for d in factors], dtype=np.int64)
    # chi_exp[a, g]: theta-power index of the character a evaluated at g
    chi_exp = ((exps * char_weights) @ exps.T) % n
    chi_at_inverse = chi_exp[:, inv_perm]

    inv_order = pow(order, -1, p)
    dual = orbit_partition(q, group)
    one_vec = np.zeros((order, depth), dtype=np.int64)
    one_vec[0, :alpha] = np.array(
        _flatten_base(tower, tower.base.one), dtype=np.int64
    )
    total = np.zeros((order, depth), dtype=np.int64)
    base_ppows = p ** np.arange(alpha, dtype=np.int64)

    reports = []
    for orbit in dual.orbits:
        idx = np.array([group.rank(m) for m in orbit.members], dtype=np.int64)
        rows = theta_digits[chi_at_inverse[idx]]          # (|O|, |G|, depth)
        summed = (rows.sum(axis=0) * inv_order) % p       # (|G|, depth)
        if summed[:, alpha:].any():
            raise CoefficientNotRational(
                f"orbit {orbit.representative} produced coefficients outside "
                f"F_{tower.q}"
            )
        total = (total + summed) % p
        coeffs = tuple(int(v) for v in (summed[:, :alpha] * base_ppows).sum(axis=1))
        element = AlgebraElement(group, tower.base, coeffs)
        oracle = ideal_dimension_oracle(element, rank_cap)
        if oracle != orbit.size:
            raise PredicateMismatch(
                f"orbit size {orbit.size} but rank oracle {oracle} for "
                f"representative {orbit.representative}"
            )
        reports.append(MinimalIdealReport(orbit, element, orbit.size, oracle))
    if not np.array_equal(total, one_vec):
        raise PredicateMismatch("primitive idempotents do not sum to 1")
    return reports


def _flatten_base(tower: FieldTower, c) -> tuple[int, ...]:
    return tower.base.flat_coeffs(c)


def splitting_tower(q: int, group: AbelianGroup, seed: int = 0) -> FieldTower:
    """The minimal splitting tower F_{q^l} for F_q[G]."""
    return field_tower(q, orbit_size_lcm(q, group), seed)


# -- dimension shortcuts ----------------------------------------------------------

def ecd_dimension(
    e: AlgebraElement, *, check_oracle: bool = False, rank_cap: int = DEFAULT_RANK_CAP
) -> int:
    """Dimension of the ideal generated by an idempotent e when dim <= p.

    Reads the least positive residue of |G| * lambda_1(e) modulo p (residue
    0 means p itself).  The caller asserts dim <= p; with ``check_oracle``
    the rank oracle is consulted and a disagreement raises DimensionExceedsP.
    """
    if not is_idempotent(e):
        raise NotIdempotent("ecd_dimension requires an idempotent")
    p = e.field.char
    lam = e.coeffs[0]
    if lam >= p:
        raise CoefficientNotRational(
            f"identity coefficient code {lam} does not lie in F_{p}"
        )
    r = (e.group.order % p) * lam % p
    if r == 0:
        r = p
    if check_oracle:
        oracle = ideal_dimension_oracle(e, rank_cap)
        if oracle != r:
            raise DimensionExceedsP(
                f"residue shortcut gives {r} but the rank oracle gives {oracle}; "
                "the ideal dimension exceeds p"
            )
    return r


def minimal_ideal_dimensions(q: int, group: AbelianGroup) -> list[int]:
    """Sorted multiset of minimal-ideal dimensions: the q-orbit sizes."""
    return sorted(orbit_partition(q, group).sizes)
