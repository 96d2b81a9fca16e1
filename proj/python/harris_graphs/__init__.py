"""Harris graphs: tough, Eulerian, non-Hamiltonian graphs."""

import json

from ._core import (
    CeilingExceeded,
    Graph,
    GraphError,
    canonical_form,
    emit_graph6,
    enumerate_harris,
    find_barnacles,
    find_hamiltonian_cycle,
    flower,
    graft,
    grow_barnacle,
    hirotaka,
    is_barnacle_free,
    is_eulerian,
    is_harris,
    is_tough,
    isomorphic,
    justine,
    parse_graph6,
    shaw,
    sigma2,
    simplify_all,
)
from ._core import check_json as _check_json

__all__ = [
    "CeilingExceeded",
    "Graph",
    "GraphError",
    "canonical_form",
    "check",
    "emit_graph6",
    "enumerate_harris",
    "find_barnacles",
    "find_hamiltonian_cycle",
    "flower",
    "graft",
    "grow_barnacle",
    "hirotaka",
    "is_barnacle_free",
    "is_eulerian",
    "is_harris",
    "is_tough",
    "isomorphic",
    "justine",
    "parse_graph6",
    "shaw",
    "sigma2",
    "simplify_all",
]


def check(graph):
    """Full report for a Graph or graph6 string, as a dict."""
    if isinstance(graph, str):
        graph = parse_graph6(graph)
    return json.loads(_check_json(graph))
