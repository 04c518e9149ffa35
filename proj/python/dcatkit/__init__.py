"""DCAT 2 parsing, validation and crosswalks."""

from ._core import (
    DcatkitError,
    Graph,
    cite,
    infer_closure,
    list_rules,
    parse,
    serialize,
    to_schema_org,
    validate,
)

__all__ = [
    "DcatkitError",
    "Graph",
    "cite",
    "infer_closure",
    "list_rules",
    "parse",
    "serialize",
    "to_schema_org",
    "validate",
]
