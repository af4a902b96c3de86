"""Exact integer homological algebra.

Sparse integer matrices with Smith/Hermite forms, chain and double complexes,
group-ring resolutions for free-abelian and free groups, and the spectral
sequence of a double complex with filtration extraction.
"""

from .intmat import (
    AbelStructure,
    IntMatrix,
    Subquotient,
    block_diag,
    canonical_rows,
    determinant,
    hermite_row_form,
    inverse_unimodular,
    kernel_basis,
    quotient_structure,
    rank,
    smith_normal_form,
    snf_diagonal,
    solve_integer,
    solve_rational,
    subgroup_contains,
    subgroup_le,
    subgroup_sum,
)
from .complexes import (
    ChainComplex,
    GradedGroup,
    kunneth_product,
    single_generator,
    tensor_chain_complexes,
    two_term,
)
from .groupring import (
    FreeAbelianGroup,
    FreeGroup,
    GroupRingComplex,
    ProductGroup,
    RingElt,
    TrivialGroup,
    build_resolution,
    group_homology,
    resolution_free,
    resolution_free_abelian,
    tensor_group_ring_complexes,
)
from .double import DoubleComplex, tensor_complexes, tensor_over_group
from .spectral import (
    SizeGuardError,
    SpectralPage,
    SpectralResult,
    rank_limit,
    run_spectral_sequence,
)
from .io import (
    matrix_from_mm,
    matrix_to_mm,
    page_to_csv,
    read_matrix_market,
    spectral_summary,
    write_json,
    write_matrix_market,
    write_spectral_artifacts,
)
