"""Token graphs of stars, paths and complete graphs, with certified tree
decompositions, brambles and exact treewidth oracles at desk scale."""

from .errors import InvalidParameterError, ResourceLimitError
from .graphs import (
    Graph,
    cartesian_product,
    complete_graph,
    components,
    generate,
    graph_from_json,
    graph_to_json,
    laplacian,
    path_graph,
    star_graph,
)
from .tokens import (
    TokenGraph,
    complement_isomorphism,
    grid_embedding,
    k_subsets,
    subset_lex_rank,
    token_config_subgraph,
    token_graph,
    token_graph_from_json,
    token_graph_to_json,
)
from .decompositions import (
    TreeDecomposition,
    bag_size_formula,
    decomposition_from_json,
    decomposition_to_json,
    f2kn_path_decomposition,
    fkkn_lex_decomposition,
    max_bag,
    star_decomposition,
    upper_bound_tw_kn,
    validate,
    width,
)
from .brambles import (
    Bramble,
    bramble_from_json,
    bramble_to_json,
    kn_bramble,
    min_hitting_set,
    star_bramble,
    validate_bramble,
)
from .oracles import (
    SpectralReport,
    border,
    elimination_width,
    exact_treewidth,
    exact_treewidth_certificate,
    f2pn_ordering,
    jacobi_eigenvalues,
    lambda2,
    max_border,
    mmb_certificate,
    mmb_exhaustive,
    spectral_lower_bound,
)
from .formulas import (
    BoundReport,
    bounds,
    complete_bounds,
    f2kn_exact,
    f3kn_upper,
    path_bounds,
    star_bounds,
)

__version__ = "0.1.0"
