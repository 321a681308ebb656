"""coverdepth: exact depth of symbolic powers of graph cover ideals.

The package decides and enumerates t-admissible subgraphs (the colon
radicals of symbolic cover powers), computes depth for cycles and forests
through edge-ideal regularity, checks the closed form
n - 1 - floor(tn/(2t+1)) for cycles at t >= 2, and cross-verifies
everything against generator-level ideal arithmetic and an exact rational
homology oracle.
"""

from ._kernels import BACKEND as kernel_backend
from .admissible import (
    AdmissibleFamily,
    Certificate,
    alternating_chain_certificate,
    build_ones_configuration,
    certificate_expand,
    certificate_solve,
    enumerate_admissible_bruteforce,
    enumerate_admissible_cycle,
    is_admissible,
    is_realizable,
    reduce_block_2or3,
    reduce_block_ge4,
    validate_certificate,
)
from .config import Budgets, budgets_from_env, current_budgets
from .depth import (
    DepthReport,
    check_floor_inequality,
    closed_form_depth_cycle,
    depth_symbolic,
    max_admissible_nu_cycle,
    ordinary_power_depth_cycle,
    reg_cycle,
    reg_forest,
)
from .errors import (
    CoverDepthError,
    InfeasibleParameterError,
    InvalidParameterError,
    OutOfHypothesisError,
    SizeLimitError,
    UnsupportedInputError,
)
from .graphs import (
    EMPTY_SUBGRAPH,
    FULL_SUBGRAPH,
    CyclicBlockProfile,
    Graph,
    block_gap_decomposition,
    graph_from_designator,
    induced_matching_number,
    is_forest,
    make_cycle,
    make_path,
    nu_path_closed_form,
)
from .homology import (
    SimplicialComplex,
    depth_via_polarization,
    independence_complex,
    reduced_homology_ranks,
    reg_pd_hochster,
)
from .ideals import (
    IN_IDEAL,
    MonomialIdeal,
    SymbolicCoverIdeal,
    colon_by_monomial,
    colon_radical_subgraph,
    contains,
    cover_ideal,
    edge_ideal,
    expand_generators,
    polarize,
    radical,
    symbolic_cover_power,
)

__version__ = "0.1.0"
