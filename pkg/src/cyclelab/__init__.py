"""Exact tools for symplectic splittings, multicurve cells, and the
equivariant homology bookkeeping built on top of them.

Everything computes over the integers or rationals; nothing here is
floating point.  The subpackage `homalg` holds the generic linear algebra,
the surface-specific layers live in `symplectic`, `multicurve`,
`cycle_complex`, `cartan_leray`, and `torelli_classes`, and `cli` exposes
the command line.
"""

from .symplectic import (
    Splitting,
    SymplecticError,
    analyze_splitting,
    intersection,
    orbit_key,
    parse_vector,
    reverse,
    shift,
    standard_splitting,
    standard_truncated,
    transvection,
    validate_splitting,
)
from .multicurve import (
    DecompGraph,
    MulticurveError,
    build_standard,
    check_conditions,
    graph_from_json,
    graph_to_json,
    multicurve_invariants,
    validate_graph,
)
from .cycle_complex import (
    CycleError,
    OneCycle,
    build_cell,
    check_M_membership,
    cube_structure,
    enumerate_basic_cycles,
)
from .cartan_leray import (
    CartanLerayError,
    EquivariantCellData,
    VanishingRegion,
    assemble_e1,
    certify_stable,
    e1_matches_expansion,
    expand_double_complex,
    quotient_by_orbit,
    stabilizer_of_supercell,
    verify_corner_lemma,
)
from .torelli_classes import (
    AbelianCycleSymbol,
    TorelliClassError,
    apply_involution,
    independence_certificate,
    involution_sign,
    make_symbol,
    phi_evaluate,
    theta_signs,
)
from .homalg import run_spectral_sequence

__version__ = "0.1.0"

__all__ = [
    "AbelianCycleSymbol",
    "CartanLerayError",
    "CycleError",
    "DecompGraph",
    "EquivariantCellData",
    "MulticurveError",
    "OneCycle",
    "Splitting",
    "SymplecticError",
    "TorelliClassError",
    "VanishingRegion",
    "analyze_splitting",
    "apply_involution",
    "assemble_e1",
    "build_cell",
    "build_standard",
    "certify_stable",
    "check_M_membership",
    "check_conditions",
    "cube_structure",
    "e1_matches_expansion",
    "enumerate_basic_cycles",
    "expand_double_complex",
    "graph_from_json",
    "graph_to_json",
    "independence_certificate",
    "intersection",
    "involution_sign",
    "make_symbol",
    "multicurve_invariants",
    "orbit_key",
    "parse_vector",
    "phi_evaluate",
    "quotient_by_orbit",
    "reverse",
    "run_spectral_sequence",
    "shift",
    "stabilizer_of_supercell",
    "standard_splitting",
    "standard_truncated",
    "theta_signs",
    "transvection",
    "validate_graph",
    "validate_splitting",
    "__version__",
]
