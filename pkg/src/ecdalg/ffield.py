"""Exact finite-field towers F_p <= F_q <= F_{q^t} with quotient arithmetic.

Representation follows the tower: an F_q element is a coefficient tuple over
F_p (a plain int when alpha = 1), an F_{q^t} element is a coefficient tuple
over F_q, both lowest degree first and always reduced.  Field objects own
the arithmetic; elements are bare ints/tuples.

Extension multiplication packs coefficient vectors into one big integer per
operand (Kronecker substitution: a wide digit per prime-field coefficient,
with slot spacing so the two tower levels cannot collide) and lets CPython's
integer multiply do the convolution.  Digit widths are chosen so no digit
can overflow, so the arithmetic stays exact; a schoolbook multiplication is
kept alongside as an independent cross-check for the tests.

All randomized searches (irreducible moduli, roots of unity) draw from
seeded generators, so identical inputs reproduce identical fields.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Union

from . import arith
from .errors import (
    CoefficientNotRational,
    DivisionByZero,
    NoSuchRoot,
    PredicateMismatch,
)

Element = Union[int, tuple]
Poly = tuple  # coefficient tuple over some field, lowest degree first


class PrimeField:
    """F_p with elements as plain ints in [0, p)."""

    def __init__(self, p: int):
        if not arith.is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.size = p
        self.char = p
        self.degree_over_prime = 1
        self.zero = 0
        self.one = 1 % p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero in prime field")
        return pow(a, -1, self.p)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return pow(self.inv(a), -k, self.p)
        return pow(a, k, self.p)

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    def from_int(self, k: int) -> int:
        return k % self.p

    def encode(self, a: int) -> int:
        return a

    def decode(self, code: int) -> int:
        if not 0 <= code < self.p:
            raise ValueError(f"code {code} out of range for F_{self.p}")
        return code

    def rand(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def flat_coeffs(self, a: int) -> tuple[int, ...]:
        return (a,)


class ExtensionField:
    """F_s[x]/(modulus) over a PrimeField or a prime-based ExtensionField.

    Elements are tuples of ``degree`` subfield elements, lowest degree first.
    """

    def __init__(self, subfield, modulus: Poly):
        degree = len(modulus) - 1
        if degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if modulus[-1] != subfield.one:
            raise ValueError("modulus must be monic")
        if isinstance(subfield, ExtensionField) and not isinstance(
            subfield.subfield, PrimeField
        ):
            raise ValueError("towers deeper than two extension levels unsupported")
        self.subfield = subfield
        self.modulus = tuple(modulus)
        self.degree = degree
        self.size = subfield.size ** degree
        self.char = subfield.char
        self.degree_over_prime = degree * subfield.degree_over_prime
        self.zero = (subfield.zero,) * degree
        one = [subfield.zero] * degree
        one[0] = subfield.one
        self.one = tuple(one)
        self._init_packing()
        self._init_reduction_rows()

    # -- identity / comparison ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExtensionField)
            and other.subfield == self.subfield
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("ExtensionField", self.subfield, self.modulus))

    def __repr__(self) -> str:
        return f"ExtensionField(size={self.size}, degree={self.degree})"

    # -- packed multiplication ------------------------------------------------

    def _init_packing(self) -> None:
        p = self.char
        alpha = self.subfield.degree_over_prime
        # One wide digit per prime-field coefficient; a slot of 2*alpha-1
        # digits per coefficient of self, so inner products cannot spill
        # into the next slot.  The bound covers the full convolution plus
        # the reduction accumulation below.
        bound = 2 * self.degree * alpha * (p - 1) ** 2 + 1
        self._alpha = alpha
        self._stride = 2 * alpha - 1
        self._w = bound.bit_length()
        self._slot_bits = self._stride * self._w
        self._digit_mask = (1 << self._w) - 1
        self._slot_mask = (1 << self._slot_bits) - 1
        self._low_mask = (1 << (self.degree * self._slot_bits)) - 1

    def _pack(self, a: Element) -> int:
        acc = 0
        pos = 0
        w = self._w
        if self._alpha == 1:
            for c in a:
                if c:
                    acc |= c << pos
                pos += self._slot_bits
        else:
            for coeff in a:
                at = pos
                for d in coeff:
                    if d:
                        acc |= d << at
                    at += w
                pos += self._slot_bits
        return acc

    def _canon_digits(self, slot: int) -> list[int]:
        """Reduce one unpacked slot to alpha canonical prime-field digits."""
        p = self.char
        w = self._w
        mask = self._digit_mask
        alpha = self._alpha
        if alpha == 1:
            return [(slot & mask) % p]
        digits = [(slot >> (j * w)) & mask for j in range(self._stride)]
        fold = self._fold_rows
        low = digits[:alpha]
        for j in range(alpha, self._stride):
            d = digits[j]
            if d:
                row = fold[j - alpha]
                for k in range(alpha):
                    low[k] += d * row[k]
        return [v % p for v in low]

    def _pack_digits(self, digits: list[int]) -> int:
        acc = 0
        at = 0
        for d in digits:
            if d:
                acc |= d << at
            at += self._w
        return acc

    def _init_reduction_rows(self) -> None:
        sub = self.subfield
        n = self.degree
        # x^(alpha+i) mod base-modulus rows, needed to fold overflowing
        # prime-level degrees inside one slot (only when the subfield is
        # itself an extension).
        if isinstance(sub, ExtensionField):
            prime = sub.subfield
            base = [prime.neg(c) for c in sub.modulus[: sub.degree]]
            rows = [tuple(base)]
            for _ in range(sub.degree - 2):
                prev = rows[-1]
                top = prev[-1]
                shifted = [0] + list(prev[:-1])
                rows.append(
                    tuple(
                        prime.add(shifted[k], prime.mul(top, base[k]))
                        for k in range(sub.degree)
                    )
                )
            self._fold_rows = rows
        else:
            self._fold_rows = []
        # y^(n+i) mod modulus rows, packed, for the outer reduction.
        top_row = tuple(sub.neg(c) for c in self.modulus[:n])
        rows_vec = [top_row]
        for _ in range(n - 2):
            prev = rows_vec[-1]
            top = prev[-1]
            shifted = [sub.zero] + list(prev[:-1])
            rows_vec.append(
                tuple(
                    sub.add(shifted[k], sub.mul(top, top_row[k]))
                    for k in range(n)
                )
            )
        self._red_rows = [self._pack(r) for r in rows_vec]

    def mul(self, a: Element, b: Element) -> Element:
        prod = self._pack(a) * self._pack(b)
        n = self.degree
        acc = prod & self._low_mask
        slot_bits = self._slot_bits
        for i in range(n, 2 * n - 1):
            slot = (prod >> (i * slot_bits)) & self._slot_mask
            if slot:
                digits = self._canon_digits(slot)
                packed = self._pack_digits(digits)
                if packed:
                    acc += packed * self._red_rows[i - n]
        return self._finish(acc)

    def _finish(self, acc: int) -> Element:
        out = []
        slot_bits = self._slot_bits
        slot_mask = self._slot_mask
        if self._alpha == 1:
            for i in range(self.degree):
                out.append(self._canon_digits((acc >> (i * slot_bits)) & slot_mask)[0])
        else:
            for i in range(self.degree):
                digits = self._canon_digits((acc >> (i * slot_bits)) & slot_mask)
                out.append(tuple(digits))
        return tuple(out)

    def mul_schoolbook(self, a: Element, b: Element) -> Element:
        """Plain convolution + reduction; oracle for the packed path."""
        sub = self.subfield
        n = self.degree
        conv = [sub.zero] * (2 * n - 1)
        for i, ai in enumerate(a):
            if sub.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                conv[i + j] = sub.add(conv[i + j], sub.mul(ai, bj))
        top_row = tuple(sub.neg(c) for c in self.modulus[:n])
        for i in range(2 * n - 2, n - 1, -1):
            c = conv[i]
            if sub.is_zero(c):
                continue
            for k in range(n):
                conv[i - n + k] = sub.add(conv[i - n + k], sub.mul(c, top_row[k]))
        return tuple(conv[:n])

    # -- ring/field operations --------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        sub = self.subfield
        return tuple(sub.add(x, y) for x, y in zip(a, b))

    def sub(self, a: Element, b: Element) -> Element:
        sf = self.subfield
        return tuple(sf.sub(x, y) for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        sub = self.subfield
        return tuple(sub.neg(x) for x in a)

    def is_zero(self, a: Element) -> bool:
        sub = self.subfield
        return all(sub.is_zero(x) for x in a)

    def inv(self, a: Element) -> Element:
        if self.is_zero(a):
            raise DivisionByZero("inverse of zero field element")
        g, s = _poly_half_egcd(self.subfield, list(a), list(self.modulus))
        # g is a nonzero constant because the modulus is irreducible.
        if len(g) != 1:
            raise PredicateMismatch(
                "gcd with the modulus is not constant; modulus is reducible"
            )
        scale = self.subfield.inv(g[0])
        out = [self.subfield.mul(scale, c) for c in s]
        out += [self.subfield.zero] * (self.degree - len(out))
        return tuple(out[: self.degree])

    def pow(self, a: Element, k: int) -> Element:
        if k < 0:
            a = self.inv(a)
            k = -k
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    # -- conversions ------------------------------------------------------------

    def embed(self, c) -> Element:
        out = [self.subfield.zero] * self.degree
        out[0] = c
        return tuple(out)

    def from_int(self, k: int) -> Element:
        return self.embed(self.subfield.from_int(k))

    def gen(self) -> Element:
        """The residue class of the extension variable."""
        if self.degree == 1:
            return self.embed(self.subfield.neg(self.modulus[0]))
        out = [self.subfield.zero] * self.degree
        out[1] = self.subfield.one
        return tuple(out)

    def encode(self, a: Element) -> int:
        base = self.subfield.size
        code = 0
        for c in reversed(a):
            code = code * base + self.subfield.encode(c)
        return code

    def decode(self, code: int) -> Element:
        if not 0 <= code < self.size:
            raise ValueError(f"code {code} out of range for field of size {self.size}")
        base = self.subfield.size
        out = []
        for _ in range(self.degree):
            code, digit = divmod(code, base)
            out.append(self.subfield.decode(digit))
        return tuple(out)

    def rand(self, rng: random.Random) -> Element:
        return self.decode(rng.randrange(self.size))

    def flat_coeffs(self, a: Element) -> tuple[int, ...]:
        out: list[int] = []
        for c in a:
            out.extend(self.subfield.flat_coeffs(c))
        return tuple(out)


# -- polynomial helpers over an arbitrary field object -----------------------

def _poly_trim(field, a: list) -> list:
    while a and field.is_zero(a[-1]):
        a.pop()
    return a


def _poly_divmod(field, a: list, b: list) -> tuple[list, list]:
    a = _poly_trim(field, list(a))
    b = _poly_trim(field, list(b))
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = field.inv(b[-1])
    quot = [field.zero] * max(0, len(a) - len(b) + 1)
    rem = a
    while len(rem) >= len(b):
        factor = field.mul(rem[-1], inv_lead)
        shift = len(rem) - len(b)
        quot[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] = field.sub(rem[shift + i], field.mul(factor, c))
        rem = _poly_trim(field, rem)
    return quot, rem


def _poly_gcd(field, a: list, b: list) -> list:
    a = _poly_trim(field, list(a))
    b = _poly_trim(field, list(b))
    while b:
        _, r = _poly_divmod(field, a, b)
        a, b = b, r
    if a:
        scale = field.inv(a[-1])
        a = [field.mul(scale, c) for c in a]
    return a


def _poly_half_egcd(field, a: list, m: list) -> tuple[list, list]:
    """Return (g, s) with s*a = g (mod m), g the gcd of a and m."""
    r0, r1 = _poly_trim(field, list(m)), _poly_trim(field, list(a))
    s0, s1 = [field.zero], [field.one]
    while r1:
        q, r = _poly_divmod(field, r0, r1)
        r0, r1 = r1, r
        # s_next = s0 - q * s1
        prod = [field.zero] * (len(q) + len(s1))
        for i, qi in enumerate(q):
            if field.is_zero(qi):
                continue
            for j, sj in enumerate(s1):
                prod[i + j] = field.add(prod[i + j], field.mul(qi, sj))
        nxt = [field.zero] * max(len(s0), len(prod))
        for i in range(len(nxt)):
            v0 = s0[i] if i < len(s0) else field.zero
            v1 = prod[i] if i < len(prod) else field.zero
            nxt[i] = field.sub(v0, v1)
        s0, s1 = s1, _poly_trim(field, nxt) or [field.zero]
    return r0, s0


# -- irreducibility -----------------------------------------------------------


def _field_key(field) -> str:
    if isinstance(field, PrimeField):
        return f"F{field.p}"
    return f"F{field.size}/{_field_key(field.subfield)}"


def is_irreducible(field, poly: Poly) -> bool:
    """Irreducibility over ``field``: x^(s^n) = x mod f plus gcd checks at
    every proper divisor degree n/r."""
    n = len(poly) - 1
    if n < 1 or poly[-1] != field.one:
        return False
    if n == 1:
        return True
    if field.is_zero(poly[0]):
        return False
    ring = ExtensionField(field, poly)
    s = field.size
    x = ring.gen()
    checkpoints = {n // r for r in arith.iter_prime_factors(n)}
    z = x
    for k in range(1, n + 1):
        z = ring.pow(z, s)
        if k in checkpoints:
            diff = list(z)
            diff[1] = field.sub(diff[1], field.one)
            g = _poly_gcd(field, list(poly), diff)
            if len(g) != 1:
                return False
    return z == x


def find_irreducible(field, degree: int, seed: int = 0) -> Poly:
    """Monic irreducible of the given degree by seeded random search.

    Candidates are screened by a distinct-degree sweep (any factor of degree
    <= n/2 kills a reducible polynomial), and the survivor is confirmed with
    ``is_irreducible``.  Same field, degree and seed give the same result.
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    rng = random.Random(f"irreducible:{_field_key(field)}:{degree}:{seed}")
    if degree == 1:
        return (field.rand(rng), field.one)
    s = field.size
    while True:
        coeffs = [field.rand(rng) for _ in range(degree)]
        if field.is_zero(coeffs[0]):
            continue
        candidate = tuple(coeffs) + (field.one,)
        ring = ExtensionField(field, candidate)
        x = ring.gen()
        z = x
        ok = True
        for _ in range(degree // 2):
            z = ring.pow(z, s)
            diff = list(z)
            diff[1] = field.sub(diff[1], field.one)
            if len(_poly_gcd(field, list(candidate), diff)) != 1:
                ok = False
                break
        if ok and is_irreducible(field, candidate):
            return candidate


# -- the public tower ---------------------------------------------------------


class FieldTower:
    """F_p <= F_q = F_p[x]/(f) <= F_{q^t} = F_q[y]/(g), exactly represented.

    ``base`` is the F_q level (the PrimeField itself when alpha = 1) and
    ``ext`` the F_{q^t} level; both modulus polynomials come from the seeded
    irreducible search, so a tower is reproducible from (p, alpha, t, seed).
    """

    def __init__(self, p: int, alpha: int = 1, t: int = 1, *, seed: int = 0):
        if alpha < 1 or t < 1:
            raise ValueError("tower degrees must be >= 1")
        self.p = p
        self.alpha = alpha
        self.t = t
        self.seed = seed
        self.prime = PrimeField(p)
        self.base_modulus = find_irreducible(self.prime, alpha, seed=seed)
        self.base = (
            ExtensionField(self.prime, self.base_modulus) if alpha > 1 else self.prime
        )
        self.ext_modulus = find_irreducible(self.base, t, seed=seed)
        self.ext = ExtensionField(self.base, self.ext_modulus)
        self.q = p ** alpha
        self.size = self.q ** t

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, alpha={self.alpha}, t={self.t})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldTower)
            and (other.p, other.alpha, other.t, other.seed)
            == (self.p, self.alpha, self.t, self.seed)
        )

    def __hash__(self) -> int:
        return hash(("FieldTower", self.p, self.alpha, self.t, self.seed))

    @property
    def zero(self) -> Element:
        return self.ext.zero

    @property
    def one(self) -> Element:
        return self.ext.one

    def embed_base(self, c) -> Element:
        return self.ext.embed(c)

    def in_base(self, e: Element) -> bool:
        return all(self.base.is_zero(c) for c in e[1:])

    def to_base(self, e: Element):
        if not self.in_base(e):
            raise CoefficientNotRational(
                f"element {e!r} does not lie in the embedded F_{self.q}"
            )
        return e[0]

    def describe(self) -> dict:
        """JSON-friendly description; moduli lowest degree first."""
        return {
            "p": self.p,
            "alpha": self.alpha,
            "t": self.t,
            "q": self.q,
            "size": self.size,
            "seed": self.seed,
            "base_modulus": [int(c) for c in self.base_modulus],
            "ext_modulus": [
                list(self.base.flat_coeffs(c)) for c in self.ext_modulus
            ],
        }


@lru_cache(maxsize=512)
def field_tower(q: int, t: int = 1, seed: int = 0) -> FieldTower:
    """Cached tower for F_{q^t}; q may be any prime power."""
    p, alpha = arith.prime_power_parts(q)
    return FieldTower(p, alpha, t, seed=seed)


def frobenius(tower: FieldTower, e: Element, power: int = 1) -> Element:
    """The q-power Frobenius of F_{q^t}/F_q applied ``power`` times."""
    k = power % tower.t
    if k == 0:
        return e
    return tower.ext.pow(e, tower.q ** k)


def primitive_root_of_unity(
    tower: FieldTower, n: int, seed: int | None = None
) -> Element:
    """An element of multiplicative order exactly n in F_{q^t}.

    Draws seeded random elements r and tests theta = r^((q^t-1)/n) against
    every maximal proper power; raises NoSuchRoot when n does not divide
    q^t - 1, which is exactly when no such element exists.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if pow(tower.q, tower.t, n) != 1 % n:
        raise NoSuchRoot(
            f"{n} does not divide q^t - 1 = {tower.q}^{tower.t} - 1; "
            f"F_{tower.q}^{tower.t} has no primitive {n}-th root of unity"
        )
    if n == 1:
        return tower.one
    if seed is None:
        seed = tower.seed
    ext = tower.ext
    cofactor = (tower.size - 1) // n
    prime_parts = [n // s for s in arith.factorize(n).primes]
    rng = random.Random(
        f"root-of-unity:{tower.p}:{tower.alpha}:{tower.t}:{n}:{seed}"
    )
    for _ in range(4096):
        r = ext.rand(rng)
        if ext.is_zero(r):
            continue
        theta = ext.pow(r, cofactor)
        if any(ext.pow(theta, m) == ext.one for m in prime_parts):
            continue
        return theta
    raise PredicateMismatch(f"no order-{n} element found in 4096 draws")


def element_mult_order(tower: FieldTower, e: Element) -> int:
    """Exact multiplicative order, via the factorization of q^t - 1."""
    ext = tower.ext
    if ext.is_zero(e):
        raise DivisionByZero("zero has no multiplicative order")
    m = tower.size - 1
    if m == 0:
        return 1
    for s in arith.factorize(m).primes:
        while m % s == 0 and ext.pow(e, m // s) == ext.one:
            m //= s
    return m
