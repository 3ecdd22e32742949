"""Exact Stirling numbers, binomial coefficients and identities connecting them."""
from .errors import ResourceLimitError
from .exact_numbers import (
    TriangleFamily,
    TriangleTable,
    bell_number,
    binomial,
    build_triangle,
    factorial,
    stirling_first_signed,
    stirling_first_unsigned,
    stirling_second,
)
from .identities import (
    ALL_IDENTITIES,
    CheckReport,
    Counterexample,
    IdentityId,
    SideValues,
    Tables,
    eval_addition_9,
    eval_addition_10,
    eval_identity_1,
    eval_identity_2,
    eval_identity_3,
    eval_identity_4,
    eval_identity_5,
    eval_identity_6,
    eval_orthogonality,
    sweep,
)
from .oracles import count_permutations_by_cycles, count_set_partitions, count_subsets
from .transforms import (
    ProofReplay,
    replay_proof_identity_2,
    stirling_first_signed_transform,
    stirling_second_transform,
    verify_inversion_roundtrip,
)
