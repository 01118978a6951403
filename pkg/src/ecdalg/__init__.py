"""Exact orbit structure, idempotents and ECD classification for F_q[G]."""

from .abgroup import (
    AbelianGroup,
    cyclic_class,
    element_order,
    enumerate_elements,
    max_order_element,
    parse_group_spec,
)
from .arith import Factorization, divisors, euler_phi, factorize, mul_order
from .classify import (
    ClassificationReport,
    ConstructionRequest,
    ConstructedAlgebra,
    construct_minimal_ecd,
    is_ecd_algebra,
    is_minimal_ecd,
    sufficient_by_splitting_degree,
    sufficient_by_totient,
    sufficient_elementary_abelian,
)
from .ffield import (
    ExtensionField,
    FieldTower,
    PrimeField,
    element_mult_order,
    field_tower,
    find_irreducible,
    frobenius,
    is_irreducible,
    primitive_root_of_unity,
)
from .galgebra import (
    AlgebraElement,
    MinimalIdealReport,
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
from .orbits import (
    OrbitPartition,
    QOrbit,
    SplittingDegreeCheck,
    is_splitting_degree,
    minimal_splitting_degree,
    orbit_partition,
    orbit_size,
    orbit_size_lcm,
    q_orbit,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AlgebraElement",
    "ClassificationReport",
    "ConstructedAlgebra",
    "ConstructionRequest",
    "ExtensionField",
    "Factorization",
    "FieldTower",
    "MinimalIdealReport",
    "OrbitPartition",
    "PrimeField",
    "QOrbit",
    "SplittingDegreeCheck",
    "basis_element",
    "construct_minimal_ecd",
    "cyclic_class",
    "divisors",
    "ecd_dimension",
    "element_mult_order",
    "element_order",
    "enumerate_elements",
    "euler_phi",
    "factorize",
    "field_tower",
    "find_irreducible",
    "from_coefficients",
    "frobenius",
    "ideal_dimension_oracle",
    "identity_element",
    "is_ecd_algebra",
    "is_idempotent",
    "is_irreducible",
    "is_minimal_ecd",
    "is_splitting_degree",
    "max_order_element",
    "minimal_ideal_dimensions",
    "minimal_splitting_degree",
    "mul_order",
    "multiply",
    "orbit_partition",
    "orbit_size",
    "orbit_size_lcm",
    "parse_group_spec",
    "primitive_idempotents",
    "primitive_root_of_unity",
    "q_orbit",
    "splitting_tower",
    "sufficient_by_splitting_degree",
    "sufficient_by_totient",
    "sufficient_elementary_abelian",
    "uniform_idempotent",
    "zero_element",
]
