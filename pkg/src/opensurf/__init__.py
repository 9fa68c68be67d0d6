"""Decide homeomorphism of open surfaces generated by topological 2-automata."""

from .automaton import (
    Arrow,
    BlockSpec,
    Development,
    TopologicalAutomaton,
    develop,
    parse,
    serialize,
    validate,
)
from .canonical import canonical_code, isomorphic, tree_from_code
from .decoration import build_decorated_graph, propagate
from .pipeline import Invariants, Verdict, equivalent, fixture, invariants, run
from .reduce import apply_move, applicable_moves, is_reduced, reduce
from .surface_blocks import SurfaceSignature, Triangulation, signature, validate_triangulation
from .treeify import admissibilize, merge_types, unfold
from .trees import Tree

__all__ = [
    "Arrow", "BlockSpec", "Development", "Invariants", "SurfaceSignature",
    "TopologicalAutomaton", "Tree", "Triangulation", "Verdict",
    "admissibilize", "applicable_moves", "apply_move", "build_decorated_graph",
    "canonical_code", "develop", "equivalent", "fixture", "invariants",
    "is_reduced", "isomorphic", "merge_types", "parse", "propagate", "reduce",
    "run", "serialize", "signature", "tree_from_code", "unfold", "validate",
    "validate_triangulation",
]
