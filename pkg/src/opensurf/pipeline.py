"""End-to-end classification of automata and the homeomorphism verdict."""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from . import symbols as S
from .automaton import TopologicalAutomaton, check, parse
from .canonical import canonical_code
from .decoration import DecoratedGraph, build_decorated_graph, propagate
from .reduce import reduction_steps
from .treeify import DEFAULT_MAX_UNFOLD, admissibilize, unfold
from .trees import Tree

SCHEMA = 1
INF = "inf"


@dataclass
class Stages:
    graph: DecoratedGraph
    propagated: DecoratedGraph
    unfolded: Tree
    admissible: Tree
    reduced: Tree
    moves: list

    @property
    def code(self) -> str:
        return canonical_code(self.reduced)


def run(aut: TopologicalAutomaton, *, max_unfold: int = DEFAULT_MAX_UNFOLD, trace: bool = False) -> Stages:
    check(aut)
    graph = build_decorated_graph(aut)
    propagated = propagate(graph)
    unfolded = unfold(propagated, max_vertices=max_unfold)
    admissible = admissibilize(unfolded)
    reduced = admissible
    moves = []
    for move, reduced in reduction_steps(admissible):
        moves.append((move, reduced) if trace else move)
    return Stages(graph, propagated, unfolded, admissible, reduced, moves)


@dataclass(frozen=True)
class Invariants:
    orientable: bool
    genus_or_crosscaps: int | str     # "inf" when infinite
    reduced_code: str
    planar: bool
    compact: bool

    def as_dict(self) -> dict:
        return {
            "orientability": "orientable" if self.orientable else "nonorientable",
            "genus_or_crosscaps": self.genus_or_crosscaps,
            "reduced_code": self.reduced_code,
            "planar": self.planar,
            "compact": self.compact,
        }


def invariants_of_tree(t: Tree) -> Invariants:
    root = t.types[t.root]
    ordinary = [t.types[v] for v in t.ordinary()]
    infinite_genus = any(s.variant != "plain" for s in ordinary)
    if root.finite and not infinite_genus:
        amount = root.index
    else:
        amount = INF
    planar = root == S.star(0) and not infinite_genus
    return Invariants(
        orientable=root.orientable,
        genus_or_crosscaps=amount,
        reduced_code=canonical_code(t),
        planar=planar,
        compact=not ordinary,
    )


def invariants(aut: TopologicalAutomaton, *, max_unfold: int = DEFAULT_MAX_UNFOLD) -> Invariants:
    return invariants_of_tree(run(aut, max_unfold=max_unfold).reduced)


@dataclass(frozen=True)
class Verdict:
    homeomorphic: bool
    left: Invariants
    right: Invariants

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "homeomorphic": self.homeomorphic,
            "left": self.left.as_dict(),
            "right": self.right.as_dict(),
        }


def equivalent(a1: TopologicalAutomaton, a2: TopologicalAutomaton, *, max_unfold: int = DEFAULT_MAX_UNFOLD) -> Verdict:
    i1 = invariants(a1, max_unfold=max_unfold)
    i2 = invariants(a2, max_unfold=max_unfold)
    return Verdict(i1.reduced_code == i2.reduced_code, i1, i2)


FIXTURES = (
    "plane_v1", "plane_v2", "plane_tri", "cylinder", "cantor_tree",
    "loch_ness", "jacobs_ladder", "sphere", "mobius_tail", "flute_of_handles",
)


def fixture_text(name: str) -> str:
    return resources.files("opensurf.fixtures").joinpath(f"{name}.tap").read_text()


def fixture(name: str) -> TopologicalAutomaton:
    return parse(fixture_text(name))
