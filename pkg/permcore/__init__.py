"""Permutation-group engine: closure, conjugacy classes, Haar weights, power maps."""

from .group import (
    ConjClass,
    GroupTooLargeError,
    PermGroup,
    aggregated_weights,
    class_fusion,
    class_map_to_sym,
    close_group,
    conjugacy_classes,
    group_from_cycles,
    haar_weights,
    is_subgroup,
    load_group_file,
    power_map,
)
from .imported import (
    ClassDataError,
    ImportedClass,
    ImportedGroup,
    imported_group_from_dict,
    load_imported_group,
)
from .permutation import (
    Permutation,
    PermutationError,
    compose,
    conjugate,
    cycle_type,
    format_permutation,
    from_images,
    identity,
    inverse,
    order,
    parse_permutation,
    power,
)

__all__ = [
    "ClassDataError",
    "ConjClass",
    "GroupTooLargeError",
    "ImportedClass",
    "ImportedGroup",
    "PermGroup",
    "Permutation",
    "PermutationError",
    "aggregated_weights",
    "class_fusion",
    "class_map_to_sym",
    "close_group",
    "compose",
    "conjugacy_classes",
    "conjugate",
    "cycle_type",
    "format_permutation",
    "from_images",
    "group_from_cycles",
    "haar_weights",
    "identity",
    "imported_group_from_dict",
    "inverse",
    "is_subgroup",
    "load_group_file",
    "load_imported_group",
    "order",
    "parse_permutation",
    "power",
    "power_map",
]
