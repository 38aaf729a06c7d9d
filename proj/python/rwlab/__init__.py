"""Random walk labelings of graphs: exact counts, closed forms, identity checks."""

import json

from ._core import (
    Graph,
    RwlError,
    build_family,
    count_dp,
    count_started_at,
    enumerate_walk,
    formula,
    formula_names,
    is_connected,
    is_walk_obtainable,
    make_graph,
    parse_graph,
    series_terms,
)
from . import _core

__all__ = [
    "Graph",
    "RwlError",
    "build_family",
    "check_asymptotic",
    "count_dp",
    "count_started_at",
    "enumerate_walk",
    "formula",
    "formula_names",
    "is_connected",
    "is_walk_obtainable",
    "make_graph",
    "parse_graph",
    "series_terms",
    "verify_integrals",
    "verify_oracles",
    "verify_series",
    "verify_theorem",
]


def verify_theorem(claim, n_max=100):
    """claim is one of eq915, eq771, eq003, eq900-vs-901."""
    return json.loads(_core._verify_theorem(claim, n_max))


def verify_series(which, terms=25):
    """which is gg2, a087547 or a182525."""
    return json.loads(_core._verify_series(which, terms))


def verify_integrals(n_max=20, tol=1e-8):
    return json.loads(_core._verify_integrals(n_max, tol))


def check_asymptotic(ns=(25, 50, 100, 200, 400)):
    return json.loads(_core._check_asymptotic(list(ns)))


def verify_oracles(n_max=7, random_graphs=200, max_order=7, seed=20240601):
    return json.loads(_core._verify_oracles(n_max, random_graphs, max_order, seed))
