"""Exact verification of prime-power congruences for torus knot invariants.

Everything is computed over exact rationals: Laurent polynomials in q and a,
symmetric group characters, and the change of basis into z^2 = (q - 1/q)^2.
The central check is that the lifting defect of the framed invariant at a
prime p carries the factor (a - 1/a) [p]^2 with integral coefficients.
"""

from .alexlimit import (
    HookAlexanderReport,
    LimitMembership,
    LimitValue,
    framing_correction,
    hook_alexander_check,
    limit_identity_check,
    limit_membership_verdict,
    limit_ratio,
    limit_ratio_via_derivative,
)
from .combinatorics import (
    CharacterTable,
    HookShape,
    WeightMismatch,
    cache_path,
    character_table,
    chi,
    conjugate,
    hook_shapes,
    kappa,
    load_character_table,
    partition_key,
    partition_utils,
    partitions_of,
    parse_partition_key,
    save_character_table,
    z_mu,
)
from .exactring import (
    LaurentQA,
    NonExactDivision,
    NotDivisible,
    ResidualFractionalExponent,
    RingFraction,
    abracket,
    bracket_of_partition,
    divide_out_abracket,
    exact_div,
    qbracket,
    qnum,
    qnum_power,
    zsquared,
)
from .hecke import (
    CongruenceReport,
    PreconditionViolated,
    defect_cofactor,
    defect_sign,
    divisible_family_check,
    is_prime,
    lifting_defect,
    nondivisible_family_check,
    sum_split_identity,
    verify_hecke,
)
from .lmov import (
    LmovReport,
    PSeries,
    extract_f,
    free_energy,
    lmov_verdict,
    m_inverse,
    m_matrix,
    partition_function,
    reassemble_free_energy,
)
from .torus import (
    FramedUnknot,
    TorusKnot,
    alexander,
    cable_params,
    character_pairing,
    power_sum_invariant,
    power_sum_plane_value,
    scaled_invariant,
    twist_power_sum,
    unknot_schur_value,
)
from .zbasis import (
    CongruenceFragment,
    NotInSubring,
    ZAPoly,
    congruence_verdict,
    divide_by_qnum_sq,
    double_root_residual,
    qnum_sq_z2,
    to_z2,
)

__version__ = "0.1.0"

__all__ = [
    "CharacterTable",
    "CongruenceFragment",
    "CongruenceReport",
    "FramedUnknot",
    "HookAlexanderReport",
    "HookShape",
    "LaurentQA",
    "LimitMembership",
    "LimitValue",
    "LmovReport",
    "NonExactDivision",
    "NotDivisible",
    "NotInSubring",
    "PSeries",
    "PreconditionViolated",
    "ResidualFractionalExponent",
    "RingFraction",
    "TorusKnot",
    "WeightMismatch",
    "ZAPoly",
    "abracket",
    "alexander",
    "bracket_of_partition",
    "cable_params",
    "cache_path",
    "character_pairing",
    "character_table",
    "chi",
    "congruence_verdict",
    "conjugate",
    "defect_cofactor",
    "defect_sign",
    "divide_by_qnum_sq",
    "divide_out_abracket",
    "divisible_family_check",
    "double_root_residual",
    "exact_div",
    "extract_f",
    "framing_correction",
    "free_energy",
    "hook_alexander_check",
    "hook_shapes",
    "is_prime",
    "kappa",
    "lifting_defect",
    "limit_identity_check",
    "limit_membership_verdict",
    "limit_ratio",
    "limit_ratio_via_derivative",
    "lmov_verdict",
    "load_character_table",
    "m_inverse",
    "m_matrix",
    "nondivisible_family_check",
    "parse_partition_key",
    "partition_function",
    "partition_key",
    "partition_utils",
    "partitions_of",
    "power_sum_invariant",
    "power_sum_plane_value",
    "qbracket",
    "qnum",
    "qnum_power",
    "qnum_sq_z2",
    "reassemble_free_energy",
    "save_character_table",
    "scaled_invariant",
    "sum_split_identity",
    "to_z2",
    "twist_power_sum",
    "unknot_schur_value",
    "verify_hecke",
    "z_mu",
    "zsquared",
]
