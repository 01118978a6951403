"""Shared test corpus: (q, G) pairs with |G| <= 200 and char(F_q) not dividing |G|.

The expensive per-pair artifacts (orbit partitions, primitive idempotents)
are computed once per session and shared across the acceptance criteria.
"""

from dataclasses import dataclass

import pytest

from ecdalg import arith
from ecdalg.abgroup import AbelianGroup, parse_group_spec
from ecdalg.galgebra import MinimalIdealReport, primitive_idempotents, splitting_tower

CORPUS_SPECS: list[tuple[int, str]] = [
    # q = 2
    (2, "C3"), (2, "C5"), (2, "C7"), (2, "C9"), (2, "C15"), (2, "C17"),
    (2, "C21"), (2, "C33"), (2, "C45"), (2, "C63"), (2, "3x3"), (2, "3x9"),
    (2, "5x5"), (2, "3x5x7"), (2, "C51"),
    # q = 3
    (3, "C2"), (3, "C4"), (3, "C8"), (3, "C16"), (3, "C20"), (3, "C22"),
    (3, "C28"), (3, "C40"), (3, "2x2"), (3, "2x4"), (3, "2x8"), (3, "2x2x2"),
    # q = 4
    (4, "C3"), (4, "C5"), (4, "C9"), (4, "C15"), (4, "C21"), (4, "3x3"),
    # q = 5
    (5, "C2"), (5, "C3"), (5, "C4"), (5, "C6"), (5, "C8"), (5, "C12"),
    (5, "C16"), (5, "C24"), (5, "2x6"), (5, "C176"),
    # q = 7
    (7, "C2"), (7, "C3"), (7, "C4"), (7, "C6"), (7, "C8"), (7, "C9"),
    (7, "C12"), (7, "2x2"),
    # q = 8
    (8, "C3"), (8, "C5"), (8, "C7"), (8, "C9"), (8, "C11"),
    # q = 9
    (9, "C2"), (9, "C4"), (9, "C5"), (9, "C8"), (9, "C10"),
    # q = 11
    (11, "C2"), (11, "C3"), (11, "C4"), (11, "C5"), (11, "C12"),
    # q = 13
    (13, "C2"), (13, "C12"), (13, "C17"), (13, "C157"),
    # q = 25
    (25, "C11"), (25, "C16"), (25, "C176"), (25, "11x11"), (25, "2x8"),
]


@dataclass(frozen=True)
class CorpusPair:
    q: int
    p: int
    alpha: int
    group: AbelianGroup

    def __str__(self) -> str:
        return f"q={self.q} G={self.group.spec}"


def build_corpus() -> list[CorpusPair]:
    pairs = []
    for q, spec in CORPUS_SPECS:
        p, alpha = arith.prime_power_parts(q)
        group = parse_group_spec(spec)
        assert group.order <= 200 and group.order % p != 0
        pairs.append(CorpusPair(q, p, alpha, group))
    assert len(pairs) >= 50
    return pairs


@pytest.fixture(scope="session")
def corpus() -> list[CorpusPair]:
    return build_corpus()


@pytest.fixture(scope="session")
def corpus_idempotents(corpus) -> dict[CorpusPair, list[MinimalIdealReport]]:
    """Primitive idempotents (oracle-verified inside) for every corpus pair."""
    return {
        pair: primitive_idempotents(
            pair.q, pair.group, splitting_tower(pair.q, pair.group)
        )
        for pair in corpus
    }
