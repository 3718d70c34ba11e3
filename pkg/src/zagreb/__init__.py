"""Exact degree-based topological indices and their generalized-book decompositions."""

from zagreb.graph import Graph, from_graph6, to_graph6
from zagreb.counting import (
    automorphism_count,
    clique_number,
    contains_subgraph,
    count_embeddings,
    count_subgraphs,
    is_connected,
)
from zagreb.canon import canonical_code, canonical_form, is_isomorphic
from zagreb.indices import IndexDef, SymmetricPoly, eval_index, registry_lookup, parse_index
from zagreb.books import class_weights, decompose_eval, ordered_weights

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "IndexDef",
    "SymmetricPoly",
    "automorphism_count",
    "canonical_code",
    "canonical_form",
    "class_weights",
    "clique_number",
    "contains_subgraph",
    "count_embeddings",
    "count_subgraphs",
    "decompose_eval",
    "eval_index",
    "from_graph6",
    "is_connected",
    "is_isomorphic",
    "ordered_weights",
    "parse_index",
    "registry_lookup",
    "to_graph6",
]
