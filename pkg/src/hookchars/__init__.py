"""Exact symmetric-group characters, (k, l)-semistandard tableaux and hook character identities."""

from .characters import (
    CharacterCache,
    CharacterTable,
    ClassSize,
    character,
    character_table,
    class_size,
    dimension,
)
from .identities import (
    VerificationReport,
    hook_character_sum,
    verify_21_corollary,
    verify_classical,
    verify_hook_sum,
    verify_main_identity,
)
from .limits import ResourceLimitError
from .partitions import (
    Partition,
    conjugate,
    hook_partitions,
    in_hook,
    in_strict_hook,
    partitions_of,
    strict_hook_partitions,
)
from .tableaux import (
    GradedAlphabet,
    Tableau,
    count_ssyt,
    count_super_ssyt,
    enumerate_super_ssyt,
    hook_content_count,
)
from .tensor import SignedWord, apply_permutation, rhs_product, trace_permutation, trace_super

__version__ = "0.1.0"
