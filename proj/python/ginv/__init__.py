"""Class-inverting automorphisms and the diagonal modular invariant of Z(G)."""

import json

from ._ginv import (
    Group,
    ParseError,
    SearchBudgetExceeded,
    SizeLimitError,
    _analyze_json,
    _an_classify_json,
    _centre_json,
    _sn_doubles_json,
    an_classification,
)

__all__ = [
    "Group",
    "ParseError",
    "SearchBudgetExceeded",
    "SizeLimitError",
    "analyze",
    "an_classification",
    "an_classify",
    "centre",
    "sn_doubles",
]


def analyze(spec, *, max_order=20000, node_budget=20_000_000, centre_max_order=200, cache_dir=""):
    """Full report for a group spec such as "S5" or "M11", as a dict."""
    return json.loads(_analyze_json(spec, max_order, node_budget, centre_max_order, str(cache_dir)))


def centre(spec, phi="identity", *, centre_max_order=200):
    """Modular invariant matrix of Z(G) for phi: "identity", "inversion" or an Aut(G) index."""
    return json.loads(_centre_json(spec, str(phi), centre_max_order))


def sn_doubles(n, *, max_order=20000):
    """Double classes of S_n labelled by factorized partitions."""
    return json.loads(_sn_doubles_json(n, max_order))


def an_classify(lo, hi=None):
    """Class-inverting classification of A_n for lo <= n <= hi."""
    return json.loads(_an_classify_json(lo, lo if hi is None else hi))["rows"]
