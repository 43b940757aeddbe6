"""Conflict-free vertex-connection numbers: exact search, constructions and bounds."""

from .graph import Graph, GraphError, from_edge_list, parse_graph6, encode_graph6
from .verifier import VertexColoring, CfvcCertificate, is_cfvc, exists_cf_path
from .solver import SolveOptions, SolveResult, feasible_k, vcfc_exact, vcfc_brute

__all__ = [
    "Graph",
    "GraphError",
    "from_edge_list",
    "parse_graph6",
    "encode_graph6",
    "VertexColoring",
    "CfvcCertificate",
    "is_cfvc",
    "exists_cf_path",
    "SolveOptions",
    "SolveResult",
    "feasible_k",
    "vcfc_exact",
    "vcfc_brute",
]
