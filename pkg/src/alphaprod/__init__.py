"""Weak h-products of bipartite graphs, labeling transfer, and cyclic decompositions."""

from .constructions import (
    LabeledProduct,
    alpha_product_labeling,
    bigraceful_product_labeling,
    near_alpha_product_labeling,
)
from .decompositions import (
    Decomposition,
    Host,
    k2nx1_decomposition,
    knn_decomposition,
    near_alpha_to_bigraceful,
    verify_decomposition,
)
from .errors import (
    AlphaProdError,
    AssignmentError,
    CertificationError,
    DecompositionError,
    FamilyError,
    HypothesisError,
    ParseError,
    PartitionError,
    PreconditionError,
    SearchBoundError,
)
from .families import FamilySpec, count_family, enumerate_family, validate_family
from .graph import (
    BipartiteGraph,
    Digraph,
    Graph,
    orient_bipartite,
    reindex,
    remove_isolated,
    same_graph,
    underlying,
    validate_bipartition,
)
from .labelings import (
    AlphaCheck,
    BigracefulLabeling,
    VertexLabeling,
    search_labelings,
    stable_sets_from_alpha,
    validate_alpha,
    validate_beta,
    validate_bigraceful,
    validate_near_alpha,
)
from .products import (
    GammaFamily,
    check_weak_from_direct,
    check_weak_h_from_direct,
    direct_product,
    tensor_h_product,
    weak_tensor,
    weak_tensor_h,
)

__version__ = "0.1.0"
