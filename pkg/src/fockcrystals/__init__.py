"""Combinatorics of higher-level Fock spaces.

Charged multipartitions, their abacus models and runner bijections,
level-rank duality, Kashiwara crystals via the good-box rule, the
Heisenberg crystal computed through good vertical strips, and the
symmetric-function layer (bosons on wedges, Kostka transitions) that
grounds it algebraically.
"""

from .core import (
    Box,
    ChargedMultipartition,
    Partition,
    add_partitions,
    as_partition,
    compare_boxes,
    conjugate_charged,
    conjugate_partition,
    content,
    e_regular_decompose,
    is_asymptotic,
    make_charged,
    partitions_of,
    scale_partition,
)
from .abacus import (
    Abacus,
    from_abacus,
    level_one_abacus,
    level_rank_dual,
    level_rank_dual_inverse,
    make_abacus,
    read_level_one,
    rotate_conjugate,
    tau_inverse_map,
    tau_inverse_position,
    tau_map,
    tau_position,
    taudot_inverse_map,
    taudot_inverse_position,
    taudot_map,
    taudot_position,
    to_abacus,
)
from .kashiwara import (
    CrystalGraph,
    crystal_graph,
    crystal_slice,
    dual_e_tilde,
    dual_f_tilde,
    e_tilde,
    f_tilde,
    hw_path,
    is_hw,
    reduce_signature,
    residue,
    signature,
)
from .heisenberg import (
    CrystalConsistencyError,
    HCrystalGraph,
    KappaResult,
    admissible_strips,
    b_minus,
    b_minus_one,
    b_one,
    b_sigma_via_periods,
    frontier,
    good_strips,
    h_crystal_component,
    is_h_hw,
    kappa,
    tc,
)
from .symfun import (
    WedgeVector,
    h_operator,
    h_sigma,
    inverse_kostka,
    kostka,
    normalize_wedge,
    p_action,
    s_sigma,
    verify_complete_schur,
    z_value,
)

__version__ = "0.1.0"
