import math

import pytest

from ecdalg import arith
from ecdalg.abgroup import (
    AbelianGroup,
    cyclic_class,
    element_order,
    enumerate_elements,
    max_order_element,
    parse_group_spec,
)
from ecdalg.errors import ElementShapeMismatch, GroupTooLarge


def order_by_repeated_multiplication(group, g):
    h = g
    n = 1
    while h != group.identity:
        h = group.mul(h, g)
        n += 1
    return n


class TestAbelianGroup:
    def test_order_and_exponent(self):
        g = AbelianGroup([2, 16, 9, 3])
        assert g.order == 864
        assert g.exponent == 144

    def test_parse_specs(self):
        assert parse_group_spec("C2669").factor_orders == (2669,)
        assert parse_group_spec("2x16x9x3").factor_orders == (2, 16, 9, 3)
        assert parse_group_spec("c2Xc8").factor_orders == (2, 8)

    def test_parse_rejects_garbage(self):
        for bad in ["", "Cx", "2x", "abc", "C1x2"]:
            with pytest.raises(ValueError):
                parse_group_spec(bad)

    def test_invariant_factors(self):
        assert AbelianGroup([2, 16, 9, 3]).invariant_factors == (6, 144)
        assert AbelianGroup([2669]).invariant_factors == (2669,)
        assert AbelianGroup([2, 2]).invariant_factors == (2, 2)
        assert AbelianGroup([6, 4]).invariant_factors == (2, 12)

    def test_invariant_factor_chain_divides(self):
        for spec in ["2x16x9x3", "8x8x16x9", "12x18", "30x4x25"]:
            g = parse_group_spec(spec)
            chain = g.invariant_factors
            assert all(chain[i + 1] % chain[i] == 0 for i in range(len(chain) - 1))
            assert math.prod(chain) == g.order
            assert chain[-1] == g.exponent

    def test_invariant_factors_preserve_prime_power_components(self):
        def components(orders):
            out = []
            for d in orders:
                out.extend(p ** m for p, m in arith.factorize(d).factors)
            return sorted(out)

        for spec in ["2x16x9x3", "8x8x16x9", "12x18", "6x10x15"]:
            g = parse_group_spec(spec)
            assert components(g.factor_orders) == components(g.invariant_factors)

    def test_rank_roundtrip(self):
        g = AbelianGroup([3, 4, 5])
        seen = set()
        for r, el in enumerate(enumerate_elements(g)):
            assert g.rank(el) == r
            assert g.element_at(r) == el
            seen.add(el)
        assert len(seen) == 60

    def test_shape_mismatch(self):
        g = AbelianGroup([2, 3])
        with pytest.raises(ElementShapeMismatch):
            g.mul((0,), (1, 2))


class TestElementOrder:
    def test_c2669_component(self):
        g = AbelianGroup([2669])
        assert element_order(g, (157,)) == 17
        assert element_order(g, (17,)) == 157

    def test_identity(self):
        g = AbelianGroup([4, 6])
        assert element_order(g, g.identity) == 1

    def test_against_repeated_multiplication(self):
        g = AbelianGroup([2, 16, 9, 3])
        assert order_by_repeated_multiplication(g, (1, 1, 1, 0)) == 144
        assert element_order(g, (1, 1, 1, 0)) == 144

    def test_exhaustive_small_groups(self):
        for spec in ["C12", "2x2x3", "4x6", "C45"]:
            g = parse_group_spec(spec)
            for el in enumerate_elements(g):
                assert element_order(g, el) == order_by_repeated_multiplication(g, el)


class TestMaxOrderElement:
    def test_cyclic(self):
        g = AbelianGroup([2669])
        assert element_order(g, max_order_element(g)) == 2669

    def test_klein(self):
        g = AbelianGroup([2, 2])
        assert max_order_element(g) == (1, 0)

    def test_mixed_matches_exhaustive_max(self):
        g = AbelianGroup([2, 16, 9, 3])
        best = max(element_order(g, el) for el in enumerate_elements(g))
        assert best == 144
        assert element_order(g, max_order_element(g)) == 144

    def test_order_equals_exponent_everywhere(self):
        for spec in ["C7", "2x4", "4x6", "9x3", "2x2x2", "10x4"]:
            g = parse_group_spec(spec)
            assert element_order(g, max_order_element(g)) == g.exponent


class TestEnumeration:
    def test_c2(self):
        assert list(enumerate_elements(AbelianGroup([2]))) == [(0,), (1,)]

    def test_c2_x_c3_lexicographic(self):
        els = list(enumerate_elements(AbelianGroup([2, 3])))
        assert els == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]

    def test_c176_no_duplicates(self):
        els = list(enumerate_elements(AbelianGroup([176])))
        assert len(els) == 176 == len(set(els))

    def test_cap(self):
        with pytest.raises(GroupTooLarge):
            list(enumerate_elements(AbelianGroup([100, 100]), cap=500))


class TestCyclicClass:
    def test_size_is_phi_of_order(self):
        g = AbelianGroup([11, 11])
        el = (1, 0)
        assert len(cyclic_class(g, el)) == 10

    def test_identity(self):
        g = AbelianGroup([5])
        assert cyclic_class(g, g.identity) == {(0,)}

    def test_c4_generator(self):
        g = AbelianGroup([4])
        assert cyclic_class(g, (1,)) == {(1,), (3,)}

    def test_phi_law_exhaustive(self):
        for spec in ["C30", "4x9", "2x2x5"]:
            g = parse_group_spec(spec)
            for el in enumerate_elements(g):
                assert len(cyclic_class(g, el)) == arith.euler_phi(
                    element_order(g, el)
                )

    def test_order_divides_exponent_divides_order(self):
        for spec in ["C24", "6x10", "2x8x5"]:
            g = parse_group_spec(spec)
            orders = [element_order(g, el) for el in enumerate_elements(g)]
            assert max(orders) == g.exponent
            for d in orders:
                assert g.exponent % d == 0
            assert g.order % g.exponent == 0
