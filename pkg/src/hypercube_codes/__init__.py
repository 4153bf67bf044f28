"""Binary codes with bounded erasure list size, seen as subsets of the
hypercube that meet every subcube of a given dimension in few vertices.

The package splits into:

* ``gf2``        packed-integer linear algebra over GF(2)
* ``basisprob``  probability that random vectors form a basis, and its limit
* ``extremal``   counting extremal quantities (basis-forming column subsets,
                 partition maxima) and assembling bound tables
* ``codes``      randomized layered constructions and weight-class codes
* ``cube``       subcube enumeration, list-size verification, exact searches
* ``hypergraph`` uniform hypergraphs, copy containment and Lagrangians
"""

from .errors import ConstructionError, OutOfRegimeError
from .gf2 import (
    MAX_BITS,
    BitWord,
    GF2Matrix,
    code_from_parity_check,
    count_nonsingular_submatrices,
    is_basis,
    min_distance,
    orthogonal_complement,
    plotkin_bound,
    rank,
    rank_ints,
)
from .basisprob import (
    MAX_T,
    SimplexPoint,
    basis_probability,
    basis_recurrence_check,
    first_draw_bound,
    independent_draw_probability,
    limit_constant,
    limit_interval,
    monte_carlo_basis_probability,
    prob_first_draw_unrepeated,
    uniform_basis_probability,
)
from .extremal import (
    BasisSubsetBounds,
    BasisSubsetMaximum,
    ListSizeBoundsRow,
    PartitionGrowthCheck,
    PartitionMaximum,
    ShapeMaximum,
    basis_subset_bounds,
    list_size_bounds_table,
    max_basis_subsets,
    max_basis_subsets_any_k,
    max_partition_product_sum,
    partition_growth_check,
    product_partition_lower_bound,
)
from .codes import (
    DENSITY_THRESHOLD,
    Code,
    HittingSetResult,
    LayerAssignment,
    ResidueSelection,
    RetryPolicy,
    best_residue_subcode,
    build_layer_vectors,
    expected_dependent_fraction,
    layer_words,
    layered_basis_code,
    load_code,
    residue_subcode,
    save_code,
    subcube_hitting_set,
    weight_class_code,
)
from .cube import (
    HittingReport,
    MaxCodeResult,
    Subcube,
    VerificationReport,
    enumerate_subcubes,
    erasure_list_size,
    free_sets_colex,
    max_code_search,
    max_subcube_count,
    max_subcube_count_naive,
    subcube_at,
    subcube_count,
    subcube_total,
    verify_hitting,
)
from .hypergraph import (
    LagrangianResult,
    UniformHypergraph,
    augmented_complete,
    basis_hypergraph,
    blow_up,
    complete_multipartite,
    contains_copy,
    lagrangian,
    lagrangian_polynomial,
    linear_independence_density,
    linear_independence_hypergraph,
)

__version__ = "0.1.0"

__all__ = [
    "ConstructionError",
    "OutOfRegimeError",
    "MAX_BITS",
    "BitWord",
    "GF2Matrix",
    "code_from_parity_check",
    "count_nonsingular_submatrices",
    "is_basis",
    "min_distance",
    "orthogonal_complement",
    "plotkin_bound",
    "rank",
    "rank_ints",
    "MAX_T",
    "SimplexPoint",
    "basis_probability",
    "basis_recurrence_check",
    "first_draw_bound",
    "independent_draw_probability",
    "limit_constant",
    "limit_interval",
    "monte_carlo_basis_probability",
    "prob_first_draw_unrepeated",
    "uniform_basis_probability",
    "BasisSubsetBounds",
    "BasisSubsetMaximum",
    "ListSizeBoundsRow",
    "PartitionGrowthCheck",
    "PartitionMaximum",
    "ShapeMaximum",
    "basis_subset_bounds",
    "list_size_bounds_table",
    "max_basis_subsets",
    "max_basis_subsets_any_k",
    "max_partition_product_sum",
    "partition_growth_check",
    "product_partition_lower_bound",
    "DENSITY_THRESHOLD",
    "Code",
    "HittingSetResult",
    "LayerAssignment",
    "ResidueSelection",
    "RetryPolicy",
    "best_residue_subcode",
    "build_layer_vectors",
    "expected_dependent_fraction",
    "layer_words",
    "layered_basis_code",
    "load_code",
    "residue_subcode",
    "save_code",
    "subcube_hitting_set",
    "weight_class_code",
    "HittingReport",
    "MaxCodeResult",
    "Subcube",
    "VerificationReport",
    "enumerate_subcubes",
    "erasure_list_size",
    "free_sets_colex",
    "max_code_search",
    "max_subcube_count",
    "max_subcube_count_naive",
    "subcube_at",
    "subcube_count",
    "subcube_total",
    "verify_hitting",
    "LagrangianResult",
    "UniformHypergraph",
    "augmented_complete",
    "basis_hypergraph",
    "blow_up",
    "complete_multipartite",
    "contains_copy",
    "lagrangian",
    "lagrangian_polynomial",
    "linear_independence_density",
    "linear_independence_hypergraph",
    "__version__",
]
