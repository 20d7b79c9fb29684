"""Exact arrow-simplicity of tournaments.

Data model and statistics (`core`), the exact solver with its
compiled/pure scan kernels (`modsimp`), extremal constructions and the
skew-matrix bridge (`constructions`), machine-checkable verification
suites (`verify`), and file formats plus the CLI (`formats`, `cli`).
"""

__version__ = "0.1.0"

from .core import (
    NEAR_REGULAR,
    NEITHER,
    REGULAR,
    DegreeProfile,
    PairStats,
    Regularity,
    Tournament,
    delete_vertices,
    from_matrix,
    from_out_rows,
    global_minima,
    neighborhoods,
    pair_stats,
    regularity_class,
    reverse_arcs,
)
from .modsimp import (
    EXACT_CAP,
    DecomposabilityGraph,
    SimplicityReport,
    arrow_simplicity,
    arrow_simplicity_brute_force,
    cheap_witnesses,
    congruence_bound,
    cost_lower_bound,
    default_backend,
    is_module,
    is_simple,
    is_simple_exhaustive,
    minimal_module_closure,
    module_cost,
)
from .constructions import (
    NearRegularPartition,
    SkewHadamard,
    all_tournaments,
    arc_class_profile_holds,
    doubly_regular_profile_holds,
    extend_to_doubly_regular,
    from_skew_hadamard,
    is_doubly_regular,
    near_regular_partition,
    paley_tournament,
    random_tournament,
    separator_conditions_hold,
    skew_hadamard,
    to_skew_hadamard,
    tournament_from_bits,
)
from .verify import (
    CheckResult,
    SuiteReport,
    SweepConfig,
    bound_suite,
    characterization_population,
    deletion_tightness_suite,
    extension_round_trip_suite,
    identity_suite,
    max_simplicity_characterization,
    near_regular_even_sum,
    sweep,
)
