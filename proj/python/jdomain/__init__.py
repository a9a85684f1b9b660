"""Normal j-algebras, Siegel domains and line-bundle parameters."""

from ._jdomain import (
    Model,
    ParseError,
    ValidationError,
    builtin_names,
    classify,
    export_fields,
    is_unitarizable,
    partition_label,
    run_suite,
    suite_from_json,
)

__all__ = [
    "Model",
    "ParseError",
    "ValidationError",
    "builtin_names",
    "classify",
    "export_fields",
    "is_unitarizable",
    "partition_label",
    "run_suite",
    "suite_from_json",
]
