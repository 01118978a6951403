import random

import pytest

from ecdalg.abgroup import AbelianGroup, parse_group_spec
from ecdalg.errors import (
    AlgebraMismatch,
    DimensionExceedsP,
    GroupTooLarge,
    NotIdempotent,
)
from ecdalg.ffield import PrimeField, field_tower
from ecdalg.galgebra import (
    AlgebraElement,
    _multiply_generic,
    _rank_generic,
    basis_element,
    ecd_dimension,
    from_coefficients,
    ideal_dimension_oracle,
    identity_element,
    is_idempotent,
    minimal_ideal_dimensions,
    multiply,
    primitive_idempotents,
    splitting_tower,
    uniform_idempotent,
    zero_element,
)


def random_element(group, field, rng):
    return from_coefficients(
        group, field, [field.decode(rng.randrange(field.size)) for _ in range(group.order)]
    )


class TestMultiply:
    def test_identity_is_neutral(self):
        g = AbelianGroup([6])
        f = PrimeField(5)
        rng = random.Random(1)
        a = random_element(g, f, rng)
        assert multiply(a, identity_element(g, f)) == a

    def test_f2_c3_square(self):
        # (g + g^2)^2 = g^2 + 2 g^3 + g^4 = g + g^2 in characteristic 2
        g = AbelianGroup([3])
        f = PrimeField(2)
        e = from_coefficients(g, f, {(1,): 1, (2,): 1})
        assert multiply(e, e) == e

    def test_basis_times_basis(self):
        g = AbelianGroup([4, 3])
        f = PrimeField(7)
        x, y = (1, 2), (3, 2)
        prod = multiply(basis_element(g, f, x), basis_element(g, f, y))
        assert prod == basis_element(g, f, g.mul(x, y))

    def test_matches_generic_path(self):
        rng = random.Random(5)
        tw = field_tower(9, 1)
        for spec in ["C8", "2x10", "C14"]:
            g = parse_group_spec(spec)
            for _ in range(5):
                a = random_element(g, tw.base, rng)
                b = random_element(g, tw.base, rng)
                assert multiply(a, b) == _multiply_generic(a, b)

    def test_commutative_and_associative(self):
        rng = random.Random(9)
        g = AbelianGroup([3, 4])
        f = PrimeField(5)
        for _ in range(5):
            a, b, c = (random_element(g, f, rng) for _ in range(3))
            assert multiply(a, b) == multiply(b, a)
            assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))

    def test_mismatched_algebras(self):
        with pytest.raises(AlgebraMismatch):
            multiply(
                identity_element(AbelianGroup([3]), PrimeField(2)),
                identity_element(AbelianGroup([5]), PrimeField(2)),
            )


class TestIsIdempotent:
    def test_zero_and_one(self):
        g = AbelianGroup([5])
        f = PrimeField(3)
        assert is_idempotent(zero_element(g, f))
        assert is_idempotent(identity_element(g, f))

    def test_uniform_average(self):
        for q, spec in [(2, "C3"), (3, "C4"), (7, "2x3")]:
            g = parse_group_spec(spec)
            f = PrimeField(q)
            assert is_idempotent(uniform_idempotent(g, f))

    def test_plain_basis_element_is_not(self):
        g = AbelianGroup([4])
        f = PrimeField(3)
        assert not is_idempotent(basis_element(g, f, (1,)))


class TestIdealDimensionOracle:
    def test_unit_ideal(self):
        g = AbelianGroup([2, 3])
        f = PrimeField(5)
        assert ideal_dimension_oracle(identity_element(g, f)) == 6

    def test_zero_ideal(self):
        g = AbelianGroup([7])
        f = PrimeField(3)
        assert ideal_dimension_oracle(zero_element(g, f)) == 0

    def test_f2_c3_circulant(self):
        g = AbelianGroup([3])
        f = PrimeField(2)
        e = from_coefficients(g, f, {(1,): 1, (2,): 1})
        assert ideal_dimension_oracle(e) == 2

    def test_matches_generic_elimination(self):
        rng = random.Random(17)
        tw = field_tower(4, 1)
        for spec in ["C5", "C9", "3x3"]:
            g = parse_group_spec(spec)
            for _ in range(4):
                e = random_element(g, tw.base, rng)
                assert ideal_dimension_oracle(e) == _rank_generic(e)

    def test_rank_cap(self):
        g = AbelianGroup([11])
        f = PrimeField(2)
        with pytest.raises(GroupTooLarge):
            ideal_dimension_oracle(identity_element(g, f), rank_cap=10)


class TestPrimitiveIdempotents:
    def test_f2_c3(self):
        g = AbelianGroup([3])
        reports = primitive_idempotents(2, g, splitting_tower(2, g))
        assert sorted(r.dimension for r in reports) == [1, 2]
        by_dim = {r.dimension: r.idempotent for r in reports}
        assert by_dim[1] == from_coefficients(g, PrimeField(2), [1, 1, 1])
        assert by_dim[2] == from_coefficients(g, PrimeField(2), [0, 1, 1])
        e0, e1 = by_dim[1], by_dim[2]
        assert multiply(e0, e1) == zero_element(g, PrimeField(2))
        assert e0 + e1 == identity_element(g, PrimeField(2))

    def test_f3_c4(self):
        g = AbelianGroup([4])
        reports = primitive_idempotents(3, g, splitting_tower(3, g))
        assert sorted(r.dimension for r in reports) == [1, 1, 2]

    def test_trivial_ideal_idempotent_is_uniform(self):
        g = AbelianGroup([5])
        reports = primitive_idempotents(3, g, splitting_tower(3, g))
        trivial = [r for r in reports if r.orbit.representative == g.identity]
        assert len(trivial) == 1
        assert trivial[0].idempotent == uniform_idempotent(g, PrimeField(3))
        assert trivial[0].dimension == 1

    @pytest.mark.parametrize(
        "q,spec",
        [(2, "C7"), (2, "C15"), (3, "C8"), (4, "C9"), (5, "C12"), (25, "C11"), (9, "2x4")],
    )
    def test_decomposition_properties(self, q, spec):
        g = parse_group_spec(spec)
        reports = primitive_idempotents(q, g, splitting_tower(q, g))
        field = reports[0].idempotent.field
        # dims sum to |G| and match the orbit sizes of G itself
        assert sum(r.dimension for r in reports) == g.order
        assert sorted(r.dimension for r in reports) == minimal_ideal_dimensions(q, g)
        # pairwise orthogonal idempotents summing to 1
        total = zero_element(g, field)
        for r in reports:
            assert is_idempotent(r.idempotent)
            assert r.oracle_verified
            total = total + r.idempotent
        assert total == identity_element(g, field)
        for i, r1 in enumerate(reports):
            for r2 in reports[i + 1 :]:
                assert multiply(r1.idempotent, r2.idempotent) == zero_element(g, field)

    def test_wrong_tower_base(self):
        g = AbelianGroup([3])
        with pytest.raises(AlgebraMismatch):
            primitive_idempotents(2, g, field_tower(4, 1))


class TestEcdDimension:
    def test_uniform_is_dimension_one(self):
        g = AbelianGroup([4, 3])
        f = PrimeField(5)
        assert ecd_dimension(uniform_idempotent(g, f), check_oracle=True) == 1

    def test_f2_c3_residue_zero_gives_p(self):
        g = AbelianGroup([3])
        f = PrimeField(2)
        e = from_coefficients(g, f, {(1,): 1, (2,): 1})
        assert ecd_dimension(e, check_oracle=True) == 2

    def test_f3_c2_half_sum(self):
        g = AbelianGroup([2])
        f = PrimeField(3)
        e = from_coefficients(g, f, [2, 2])  # (1 + g) / 2
        assert is_idempotent(e)
        assert ecd_dimension(e, check_oracle=True) == 1
        assert ideal_dimension_oracle(e) == 1

    def test_rejects_non_idempotent(self):
        g = AbelianGroup([4])
        f = PrimeField(3)
        with pytest.raises(NotIdempotent):
            ecd_dimension(basis_element(g, f, (1,)))

    def test_oracle_disagreement_raises(self):
        # identity of F_2[C_5]: dimension 5 > p = 2, residue says 5 mod 2 = 1
        g = AbelianGroup([5])
        f = PrimeField(2)
        with pytest.raises(DimensionExceedsP):
            ecd_dimension(identity_element(g, f), check_oracle=True)

    def test_agrees_with_oracle_on_all_small_ideals(self):
        for q, spec in [(2, "C3"), (3, "C4"), (5, "C4"), (7, "C9"), (4, "C5")]:
            g = parse_group_spec(spec)
            p = PrimeField(q).p if q in (2, 3, 5, 7) else field_tower(q, 1).p
            reports = primitive_idempotents(q, g, splitting_tower(q, g))
            for r in reports:
                if r.dimension <= p:
                    assert ecd_dimension(r.idempotent) == r.oracle_dimension


class TestMinimalIdealDimensions:
    def test_f2_c3(self):
        assert minimal_ideal_dimensions(2, AbelianGroup([3])) == [1, 2]

    def test_elementary_abelian_11(self):
        dims = minimal_ideal_dimensions(25, AbelianGroup([11, 11]))
        assert dims == [1] + [5] * 24

    def test_all_singletons_when_q_is_1_mod_exp(self):
        g = AbelianGroup([4, 2])
        assert minimal_ideal_dimensions(9, g) == [1] * 8

    def test_sums_to_group_order(self):
        for q, spec in [(2, "C21"), (3, "C10"), (5, "C36"), (13, "C17")]:
            g = parse_group_spec(spec)
            assert sum(minimal_ideal_dimensions(q, g)) == g.order


class TestAlgebraElementApi:
    def test_coefficient_and_lambda1(self):
        g = AbelianGroup([4])
        f = PrimeField(5)
        e = from_coefficients(g, f, [2, 3, 0, 1])
        assert e.lambda_1 == 2
        assert e.coefficient((1,)) == 3

    def test_json_form(self):
        g = AbelianGroup([3])
        tw = field_tower(4, 1)
        e = from_coefficients(g, tw.base, [tw.base.decode(c) for c in (0, 1, 3)])
        d = e.to_json_dict()
        assert d["group"] == "C3"
        assert d["field"] == {"size": 4, "char": 2}
        assert d["coeffs"] == [[0, 0], [1, 0], [1, 1]]

    def test_wrong_length_rejected(self):
        with pytest.raises(AlgebraMismatch):
            AlgebraElement(AbelianGroup([3]), PrimeField(2), (1, 0))
