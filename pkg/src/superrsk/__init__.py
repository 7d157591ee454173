"""Shuffle-parameterized super-RSK insertion on the mixed alphabet {t's, u's}.

The package provides the four bump-rule variants of the insertion algorithm
together with their inverses, the shuffle-change bijection, standardization
maps, tableau enumeration with hook Schur polynomials, and an exhaustive
verification harness for the library's structural claims.
"""

from .alphabet import (
    Alphabet,
    Letter,
    Ordering,
    Shuffle,
    adjacency_chain,
    adjacent_transposition,
    all_shuffles,
    format_shuffle,
    kl_shuffle,
    order_adjacent_pairs,
    parse_letter,
    parse_shuffle,
    t,
    u,
)
from .bijection import (
    Standardization,
    change_shuffle,
    reverse_word,
    standardize_t,
    standardize_u,
)
from .insertion import (
    DUAL_DUAL,
    DUAL_REGULAR,
    REGULAR_DUAL,
    REGULAR_REGULAR,
    VARIANTS,
    InsertionResult,
    InsertionTrace,
    PendingAction,
    Step,
    Variant,
    Word,
    all_words,
    insert_letter,
    insert_word,
    parse_variant,
    parse_word,
    variant_profile,
)
from .polynomial import Monomial, Polynomial
from .schur import (
    count_syt,
    enumerate_ssyt,
    enumerate_syt,
    hook_schur,
    partitions,
    rsk_counting_identity,
)
from .tableau import (
    Cell,
    RecordingTableau,
    Shape,
    StrictnessProfile,
    Tableau,
    TypeVector,
    classify_regions,
    content_type,
    is_standard,
    is_subtableau,
    is_valid,
    region2_components,
    region2_shape_ok,
    weight_monomial,
    word_type,
)
from .verify import (
    Alignment,
    AlignmentError,
    CaseFailure,
    Report,
    Sample,
    align_traces,
    states_equivalent,
)

__version__ = "0.1.0"
