"""Membership of graphs in ORTH[h,2,t] with constructive certificates.

Graphs are passed as edge lists (pairs of vertex labels) plus an optional
``vertices`` list for isolated vertices.  Certificates use the same text
format as the ``orthkit`` command-line tool, so the two can exchange files.
"""

from ._orthkit import (
    CapExceededError,
    CertificateParseError,
    InvalidArgumentError,
    extremal_tree,
    line_graph,
    max_leaves,
    recognize,
    root,
    separating_interval,
    validate_layout,
    validate_representation,
)

__all__ = [
    "CapExceededError",
    "CertificateParseError",
    "InvalidArgumentError",
    "extremal_tree",
    "line_graph",
    "max_leaves",
    "recognize",
    "root",
    "separating_interval",
    "validate_layout",
    "validate_representation",
]
