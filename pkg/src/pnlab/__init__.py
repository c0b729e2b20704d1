"""Prefix normal binary words: profiles, canonical forms, palindromes,
collapsing classes, and indexed jumbled pattern matching."""

from .collapse import (
    BandSpec,
    CollapseClass,
    IndexBounds,
    adjusted_lower_band,
    band_spec,
    candidate_collapsers,
    class_size_bound,
    collapse_classes,
    collapses,
    extends_to_lr,
    extension_critical,
    index_bounds,
    lower_band_word,
    palindromic_distance,
    palindromic_prefix_length,
    recursive_lr_step,
    validate_lr_profile,
)
from .jpm import JumbledIndex, build_index, query
from .limits import LimitExceededError
from .normality import (
    ClassPartition,
    PnClass,
    class_members,
    class_partition,
    enumerate_least_representatives,
    is_least_representative,
    is_prefix_normal,
    is_suffix_normal,
    least_representative,
    pn_equivalent,
    prefix_normal_form,
)
from .palindromes import (
    PnPalRecord,
    count_prefix_normal_palindromes,
    enumerate_prefix_normal_palindromes,
    extension_profile,
    is_palindrome,
    is_prefix_normal_palindrome,
    is_prefix_normal_palindrome_by_profile,
)
from .words import (
    Profile,
    Word,
    WordParseError,
    max_ones,
    max_ones_sum,
    parse_word,
    prefix_ones,
    profile_text,
    reverse_progress,
    suffix_ones,
)

__all__ = [
    "BandSpec",
    "ClassPartition",
    "CollapseClass",
    "IndexBounds",
    "JumbledIndex",
    "LimitExceededError",
    "PnClass",
    "PnPalRecord",
    "Profile",
    "Word",
    "WordParseError",
    "adjusted_lower_band",
    "band_spec",
    "build_index",
    "candidate_collapsers",
    "class_members",
    "class_partition",
    "class_size_bound",
    "collapse_classes",
    "collapses",
    "count_prefix_normal_palindromes",
    "enumerate_least_representatives",
    "enumerate_prefix_normal_palindromes",
    "extends_to_lr",
    "extension_critical",
    "extension_profile",
    "index_bounds",
    "is_least_representative",
    "is_palindrome",
    "is_prefix_normal",
    "is_prefix_normal_palindrome",
    "is_prefix_normal_palindrome_by_profile",
    "is_suffix_normal",
    "least_representative",
    "lower_band_word",
    "max_ones",
    "max_ones_sum",
    "palindromic_distance",
    "palindromic_prefix_length",
    "parse_word",
    "pn_equivalent",
    "prefix_normal_form",
    "prefix_ones",
    "profile_text",
    "query",
    "recursive_lr_step",
    "reverse_progress",
    "suffix_ones",
    "validate_lr_profile",
]
