"""Block-ascending permutations: pattern avoidance, bijections, counting."""

from .core import (
    BlockDescentError,
    BlockPermError,
    BlockPermutation,
    Composition,
    DomainError,
    DuplicateValueError,
    NotPermutationError,
    ParseError,
    SizeLimitError,
    TwoBlockView,
    as_composition,
    avoids,
    classify,
    descent_set,
    lis_length,
    parse,
    standardize,
    substitute,
)
from .bijections import (
    BijectionTrace,
    RidgePair,
    TraceStep,
    delete_max,
    delete_max_at,
    insert_max,
    insert_max_at,
    lift_blocks,
    lower_blocks,
    majorization_violation,
    majorize_inject,
    majorizes,
    map_v,
    map_w,
    reorder_blocks,
    ridge_indices,
    swap_adjacent,
    transfer_step,
)
from .enumeration import (
    DEFAULT_CAP,
    CountEntry,
    CountTable,
    catalan_triangle,
    compositions,
    count_D,
    count_L,
    count_d_two,
    gen_D,
    gen_L,
    gen_ascending,
    gen_values,
    lis_tally,
    multinomial,
)
from .tableaux import (
    Shape,
    Tableau,
    as_shape,
    cell_count,
    count_standard_brute,
    enumerate_standard,
    hook_count,
    partitions,
    perm_to_skew_tableau,
    perm_to_tableau,
    render_shape,
    skew_count,
    skew_tableau_to_perm,
    subshapes,
    tableau_to_perm,
)
from .verify import Check, SuiteReport, SUITE_NAMES, run_suite

__version__ = "0.1.0"
