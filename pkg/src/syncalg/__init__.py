"""Synchronous-game algebras over the rationals.

Exact symbolic computation for *-algebra ideals of synchronous games:
free-algebra arithmetic, two-sided noncommutative Groebner bases, graph
coloring and homomorphism games, and chromatic invariants backed by
machine-checkable certificates.
"""

from .freealg import (
    Alphabet,
    DegLexOrder,
    Poly,
    Scalar,
    Word,
    ZeroPolynomialError,
    generator,
    leading_term,
    make_monic,
    parse_poly,
    poly_add,
    poly_mul,
    poly_to_text,
    word_compare,
)
from .ncgb import (
    BasisStatus,
    GroebnerBasis,
    LinearSpan,
    MembershipVerdict,
    NormalWordCounts,
    Overlap,
    QuotientDim,
    RewriteRule,
    basis_from_text,
    basis_to_text,
    complete,
    confluence_report,
    find_overlaps,
    ideal_row_space,
    interreduce,
    is_member,
    linalg_membership,
    normal_form,
    normal_words,
    quotient_dimension,
    s_polynomial,
)
from .games import (
    IdealSpec,
    SynchronousGame,
    game_from_text,
    game_ideal,
    game_to_text,
    input_adjacency,
    lc_ideal,
    symmetrize,
    validate_synchronous,
)
from .graphs import (
    Graph,
    cartesian_product,
    complete_graph,
    coloring_game,
    cycle_graph,
    empty_graph,
    homomorphism_game,
    parse_graph,
    serialize_graph,
    strong_product,
    suspension,
    tensor_product,
)
from .chromatic import (
    ChromaticResult,
    CheckResult,
    DimReport,
    K4VerificationReport,
    chi_alg,
    chi_lc,
    clique_formula_dim,
    coloring_functional_check,
    coloring_ideal,
    dim_lc,
    generate_k4_relations,
    generate_k4_relations_by_family,
    homomorphism_ideal,
    structural_crosschecks,
    verify_k4_groebner,
)

__version__ = "0.1.0"
