"""Exact construction of completely and genuinely entangled subspaces.

Product states obtained from (modified) Veronese and Segre-Veronese maps
are turned into orthogonal decompositions of a multipartite Hilbert space:
a product part, a genuinely entangled subspace (GES) and a completely
entangled subspace (CES), all with exact rational coefficients.
"""

from .combinatorics import (
    binomial,
    bounded_composition_count,
    count_distinct_monomials,
    enumerate_bounded_compositions,
    enumerate_occupations,
    multinomial,
)
from .decompose import (
    Decomposition,
    VerificationReport,
    decompose,
    dft_ces,
    extract_ges_layers,
    gram_schmidt,
    layer_sizes,
    max_ces_dim,
    max_ges_dim,
    max_sym_ges_dim,
    three_qubit_ges_partition,
    triangular_ces,
    verify,
)
from .embeddings import (
    NUPB,
    EmbedSpec,
    EvaluationPoint,
    Family,
    build_nupb,
    choose_generic_points,
    generator_states,
    nupb_size,
    site_coefficients,
    span_rank,
)
from .errors import *  # noqa: F401,F403
from .gaussian import GaussianRational
from .multirank import (
    FlatMatrix,
    MultirankReport,
    catalecticant,
    flatten,
    is_fully_product,
    is_gme,
    multirank,
    rank_exact,
    rank_tolerant,
)
from .states import (
    Ket,
    NumericKet,
    dicke,
    frak_g_state,
    g_state,
    generalized_dicke,
    inner,
    norm_sq,
    product_state,
    script_g_state,
)

__version__ = "0.1.0"
