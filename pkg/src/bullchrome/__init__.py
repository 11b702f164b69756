"""Exact tooling for bull-free graph coloring bounds.

Everything here is exact and certificate-producing: recognition returns
witnesses, colorers verify their own output, bound comparisons are done
in integer arithmetic, and the verification suites check the structural
statements exhaustively at small orders.
"""

from .bounds import bound_approx, bound_repr, power_bound_holds
from .canon import (
    CANON_CAP,
    ENUM_CAP,
    are_isomorphic,
    automorphism_generators,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    enumerate_graphs,
)
from .coloring import (
    CHI_CAP,
    ColorAccount,
    Coloring,
    LayerDecomposition,
    build_layer_decomposition,
    chromatic_number,
    color_bullfree,
    color_nperfect,
    color_perfect,
    color_triangle_free,
    compose_coloring,
    exact_prime_colorer,
    verify_bound,
)
from .errors import (
    BullchromeError,
    CapExceededError,
    CertificationError,
    GraphFormatError,
    PreconditionError,
)
from .extremal import (
    FRACTIONAL_CAP,
    MYCIELSKI_CAP,
    PHI_EXACT_CAP,
    CStarRecipe,
    fractional_chromatic,
    maximal_stable_sets,
    mycielski_graph,
    build_base_class,
    mycielski_report,
    mycielski_step,
    phi_recursion,
    phi_interval,
    phi_lower_bound_check,
    phi_sweep,
    sample_cstar,
)
from .graph import (
    MAX_VERTICES,
    Graph,
    bfs_layers,
    bits,
    complement,
    components,
    disjoint_union,
    emit_dot,
    emit_edgelist,
    emit_graph6,
    induced_subgraph,
    is_connected,
    mask_of,
    parse_edgelist,
    parse_graph6,
)
from .modular import (
    ModularTree,
    check_layer_lemma,
    find_homogeneous_set,
    is_prime,
    modular_decomposition,
    pair_closure,
    recompose,
    substitute,
)
from .recognition import (
    T_CAP,
    PropertyReport,
    clique_number,
    find_bull,
    find_odd_hole,
    find_triangle,
    is_bull_free,
    is_n_perfect,
    is_perfect,
    is_stable,
    is_triangle_free,
    t_parameter,
)
from .verify import (
    SUITES,
    bullfree_graphs,
    run_cstar_sweep,
    run_suite,
    suite_bound,
    suite_layerlemma,
    suite_mycielski,
    suite_phi,
    suite_thm21,
)

__version__ = "0.1.0"

__all__ = [
    "BullchromeError",
    "CANON_CAP",
    "CHI_CAP",
    "CStarRecipe",
    "CapExceededError",
    "CertificationError",
    "ColorAccount",
    "Coloring",
    "ENUM_CAP",
    "FRACTIONAL_CAP",
    "Graph",
    "GraphFormatError",
    "LayerDecomposition",
    "MAX_VERTICES",
    "MYCIELSKI_CAP",
    "ModularTree",
    "PHI_EXACT_CAP",
    "PreconditionError",
    "PropertyReport",
    "SUITES",
    "T_CAP",
    "are_isomorphic",
    "automorphism_generators",
    "bfs_layers",
    "bits",
    "bound_approx",
    "bound_repr",
    "build_layer_decomposition",
    "bullfree_graphs",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "check_layer_lemma",
    "chromatic_number",
    "clique_number",
    "color_bullfree",
    "color_nperfect",
    "color_perfect",
    "color_triangle_free",
    "complement",
    "components",
    "compose_coloring",
    "disjoint_union",
    "emit_dot",
    "emit_edgelist",
    "emit_graph6",
    "enumerate_graphs",
    "exact_prime_colorer",
    "find_bull",
    "find_homogeneous_set",
    "find_odd_hole",
    "find_triangle",
    "fractional_chromatic",
    "induced_subgraph",
    "is_bull_free",
    "is_connected",
    "is_n_perfect",
    "is_perfect",
    "is_prime",
    "is_stable",
    "is_triangle_free",
    "mask_of",
    "maximal_stable_sets",
    "modular_decomposition",
    "mycielski_graph",
    "build_base_class",
    "mycielski_report",
    "mycielski_step",
    "pair_closure",
    "parse_edgelist",
    "parse_graph6",
    "phi_recursion",
    "phi_interval",
    "phi_lower_bound_check",
    "phi_sweep",
    "power_bound_holds",
    "recompose",
    "run_cstar_sweep",
    "run_suite",
    "sample_cstar",
    "substitute",
    "suite_bound",
    "suite_layerlemma",
    "suite_mycielski",
    "suite_phi",
    "suite_thm21",
    "t_parameter",
    "verify_bound",
]
