"""Computing in graph products of monoids.

A graph product glues one monoid per vertex of a finite simple graph:
letters at adjacent vertices commute, same-vertex letters multiply.
The package provides canonical normal forms and the word problem,
principal left ideal arithmetic (divisibility witnesses, chain
conditions), finite generating sets for ideal intersections and left
annihilator congruences, the weak left noetherianity classification
with its direct-product decomposition, and naive brute-force oracles
used to cross-check everything.
"""

from .core import (
    EMPTY_WORD,
    Element,
    FiniteMonoid,
    FreeMonoid,
    GPContext,
    GPError,
    GPInternalError,
    GPPreconditionError,
    GPValidationError,
    Graph,
    Letter,
    VertexMonoid,
    Word,
    is_group,
    left_inverse_of,
    make_graph,
    strip_identity_letters,
    support,
    vertex_annihilator,
    vertex_divides,
    vertex_ideal_intersection,
    vertex_projection,
)
from .normalform import (
    CanonicalForm,
    canonical,
    canonical_word,
    equal,
    foata_left,
    foata_right,
    is_reduced,
    multiply,
    reduce_word,
)
from .product_reduction import (
    DoubleShuffleData,
    Factorization,
    ReductionFunction,
    TracedReduction,
    double_shuffle_decompose,
    enumerate_reduction_functions,
    factor_common_multiple,
    reduce_product_traced,
)
from .ideals import (
    AccplReport,
    StandardForm,
    accpl_report,
    count_principal_left_ideals,
    eq_principal,
    leq_principal,
    strip_left_invertible,
)
from .structure import (
    BipartiteSplit,
    CoherencyReport,
    DecompositionReport,
    WlnReport,
    coherency_report,
    decide_wln,
    direct4_partition,
    is_relatively_complete,
    split_bipartite,
    vertex_wln,
)
from .howson import (
    GeneratorSet,
    LcmVerdict,
    find_intersection_witness,
    intersect_principal,
    lcm_check,
)
from .annihilator import (
    FleReport,
    PairSet,
    annihilator_generators,
    fle_report,
    in_left_congruence,
)
from .oracle import (
    oracle_annihilator_pairs,
    oracle_equal,
    oracle_intersection_elements,
    oracle_leq_principal,
)

__version__ = "0.1.0"

__all__ = [
    "AccplReport",
    "BipartiteSplit",
    "CanonicalForm",
    "CoherencyReport",
    "DecompositionReport",
    "DoubleShuffleData",
    "EMPTY_WORD",
    "Element",
    "Factorization",
    "FiniteMonoid",
    "FleReport",
    "FreeMonoid",
    "GPContext",
    "GPError",
    "GPInternalError",
    "GPPreconditionError",
    "GPValidationError",
    "GeneratorSet",
    "Graph",
    "LcmVerdict",
    "Letter",
    "PairSet",
    "ReductionFunction",
    "StandardForm",
    "TracedReduction",
    "VertexMonoid",
    "WlnReport",
    "Word",
    "accpl_report",
    "annihilator_generators",
    "canonical",
    "canonical_word",
    "coherency_report",
    "count_principal_left_ideals",
    "decide_wln",
    "direct4_partition",
    "double_shuffle_decompose",
    "enumerate_reduction_functions",
    "eq_principal",
    "equal",
    "factor_common_multiple",
    "find_intersection_witness",
    "fle_report",
    "foata_left",
    "foata_right",
    "in_left_congruence",
    "intersect_principal",
    "is_group",
    "is_reduced",
    "is_relatively_complete",
    "lcm_check",
    "left_inverse_of",
    "leq_principal",
    "make_graph",
    "multiply",
    "oracle_annihilator_pairs",
    "oracle_equal",
    "oracle_intersection_elements",
    "oracle_leq_principal",
    "reduce_product_traced",
    "reduce_word",
    "split_bipartite",
    "strip_identity_letters",
    "strip_left_invertible",
    "support",
    "vertex_annihilator",
    "vertex_divides",
    "vertex_ideal_intersection",
    "vertex_projection",
    "vertex_wln",
]
