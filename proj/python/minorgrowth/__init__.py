"""Counting and classifying minor-closed graph classes Ex(H_1, ..., H_k).

Excluded graphs are written in the graph DSL used by the command-line tool,
e.g. ``"complete:3"``, ``"matching:2 + iso:1"`` or ``"edges(4;1-2,2-3)"``.
"""

import json

from . import _core
from ._core import (
    CapExceeded,
    Graph,
    ParseError,
    apex_count,
    canonical_text,
    count_members,
    is_minor,
    parse_graph,
    run_criterion,
)

__all__ = [
    "CapExceeded",
    "Graph",
    "ParseError",
    "apex_count",
    "canonical_text",
    "classify",
    "constants",
    "count_members",
    "is_minor",
    "parse_graph",
    "run_criterion",
]


def _as_list(excludes):
    return [excludes] if isinstance(excludes, str) else list(excludes)


def classify(excludes):
    """Growth category of Ex(excludes), as a dict decoded from the JSON report."""
    return json.loads(_core.classify_json(_as_list(excludes)))


def constants(kmax=10, tol=1e-12):
    return json.loads(_core.constants_json(kmax, tol))


_count_members = count_members
_apex_count = apex_count


def count_members(excludes, n, workers=1):
    return _count_members(_as_list(excludes), n, workers)


def apex_count(excludes, n):
    return _apex_count(_as_list(excludes), n)
