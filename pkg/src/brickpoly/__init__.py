"""Exact computations with subword complexes, brick polytopes and
type-A sorting networks."""

from .coxeter import (
    CoxeterDatum,
    GroupElement,
    Word,
    bruhat_leq,
    c_sorting_word,
    demazure_product,
    evaluate,
    is_reduced,
    length,
    longest_element,
    reduced_word,
    simple_reflection,
)
from .subword import (
    StrataPoset,
    Subword,
    SubwordComplex,
    complement_product,
    facets,
    facets_exhaustive,
    is_sphere,
    reduced_euler_characteristic,
    richardson_seed,
    root_configuration,
    root_function,
    strata_poset,
    weight_function,
)
from .hull import Polytope, affine_hull, convex_hull, edge_graph
from .bricks import (
    BrickVector,
    ToricReport,
    associahedron_word,
    brick_polytope,
    brick_vector,
    duality_check,
    is_root_independent,
    non_facet_membership_report,
    toric_classification,
)
from .networks import (
    PseudolineArrangement,
    SortingNetwork,
    arrangement_from_face,
    brick_count_vector,
    render,
    sorting_network,
)

__all__ = [name for name in dir() if not name.startswith("_")]
