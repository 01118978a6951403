"""Exception hierarchy shared by all modules.

Two families matter for the CLI exit codes: domain errors (bad but
well-formed mathematical input, exit code 2) and resource-cap errors
(the computation would exceed a configured budget, exit code 3).
"""

from __future__ import annotations


class EcdalgError(Exception):
    """Base class for all library errors."""

    exit_code = 2


class ResourceCapError(EcdalgError):
    """A configured computation budget was exceeded."""

    exit_code = 3


# -- arith ------------------------------------------------------------------

class NotCoprime(EcdalgError):
    """Multiplicative order requested for a base not coprime to the modulus."""


class IntegerBudgetExceeded(ResourceCapError):
    """An integer left the 128-bit working range the library guarantees."""


class FactorizationBudgetExceeded(ResourceCapError):
    """Pollard rho exceeded its iteration cap on some cofactor."""


class TooManyDivisors(ResourceCapError):
    """Divisor enumeration would produce more divisors than the cap."""


# -- abgroup ----------------------------------------------------------------

class ElementShapeMismatch(EcdalgError):
    """Element coordinate count does not match the group's factor count."""


class GroupTooLarge(ResourceCapError):
    """Group order exceeds the enumeration (or rank) cap."""


# -- orbits -----------------------------------------------------------------

class NotSemisimple(EcdalgError):
    """char(F_q) divides |G|; the semisimple theory does not apply."""


class PredicateMismatch(EcdalgError):
    """Two provably-equivalent predicates disagreed; indicates a bug."""


# -- ffield -----------------------------------------------------------------

class DivisionByZero(EcdalgError, ZeroDivisionError):
    """Multiplicative inverse (or order) of zero requested."""


class NoSuchRoot(EcdalgError):
    """No primitive n-th root of unity exists in the requested field."""


# -- galgebra ---------------------------------------------------------------

class AlgebraMismatch(EcdalgError):
    """Operands live in different group algebras."""


class CoefficientNotRational(EcdalgError):
    """A coefficient expected to lie in the base field does not."""


class NotIdempotent(EcdalgError):
    """Operation requires an idempotent element."""


class DimensionExceedsP(EcdalgError):
    """The residue shortcut disagrees with the rank oracle: dim > p."""


# -- classify ---------------------------------------------------------------

class NotASplittingDegree(EcdalgError):
    """The given extension degree does not yield a splitting field."""


class InvalidRequest(EcdalgError):
    """Construction request violates its preconditions (q = 2 or t > p)."""
