"""
clancalc: Schubert structure constants for pairs of signed shuffles in Lie
types C and D, computed through the combinatorics of clans and the weak
order on symmetric-subgroup orbits, with an exact divided-difference oracle
for independent verification.
"""

__version__ = "0.1.0"

from .action import ActionStep, act_simple, act_simple_c, act_simple_d, act_word
from .bgg import (
    ExactPolynomial,
    RootSystem,
    divided_difference,
    oracle_constant,
    reflect,
    schubert_representative,
    schubert_representatives,
)
from .clans import (
    Clan,
    avoids_pattern,
    dense_orbit_clan,
    enumerate_clans,
    is_skew_symmetric,
    is_type_d_clan,
    normalize,
    parse_clan,
)
from .products import (
    SchubertProduct,
    product_to_json,
    schubert_constant,
    schubert_product,
)
from .richardson import (
    ShufflePair,
    UnsupportedPairError,
    clan_of_pair,
    classify_pair,
    pair_to_clan,
    u_of_clan,
    v_of_clan,
)
from .weak_order import (
    BrionDecomposition,
    WeakOrderGraph,
    brion_decomposition,
    build_graph,
    export_dot,
    graph_from_json,
    graph_to_json,
)
from .weyl import (
    Permutation,
    SignedPermutation,
    bruhat_leq,
    enumerate_by_length,
    evaluate_word,
    long_element,
    parse_group,
    parse_signed,
    reduced_word,
    simple_reflection,
)

__all__ = [
    "ActionStep",
    "BrionDecomposition",
    "Clan",
    "ExactPolynomial",
    "Permutation",
    "RootSystem",
    "SchubertProduct",
    "ShufflePair",
    "SignedPermutation",
    "UnsupportedPairError",
    "act_simple",
    "act_simple_c",
    "act_simple_d",
    "act_word",
    "avoids_pattern",
    "brion_decomposition",
    "bruhat_leq",
    "build_graph",
    "clan_of_pair",
    "classify_pair",
    "dense_orbit_clan",
    "divided_difference",
    "enumerate_by_length",
    "enumerate_clans",
    "evaluate_word",
    "export_dot",
    "graph_from_json",
    "graph_to_json",
    "is_skew_symmetric",
    "is_type_d_clan",
    "long_element",
    "normalize",
    "oracle_constant",
    "pair_to_clan",
    "parse_clan",
    "parse_group",
    "parse_signed",
    "product_to_json",
    "reduced_word",
    "reflect",
    "schubert_constant",
    "schubert_product",
    "schubert_representative",
    "schubert_representatives",
    "simple_reflection",
    "u_of_clan",
    "v_of_clan",
]
