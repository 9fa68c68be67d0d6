"""Decorated graph of an automaton: reachable blocks, non-loop arrows as
edges, and a type symbol per block derived from its loop count and topology.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace

from . import symbols as S
from .automaton import TopologicalAutomaton, reachable_blocks
from .surface_blocks import is_planar


@dataclass(frozen=True)
class DecoratedGraph:
    vertices: tuple
    edges: tuple            # (source, target) per non-loop arrow, arrow order kept
    types: dict
    loop_counts: dict
    root: int = 0

    def successors(self, v) -> list[int]:
        return [t for s, t in self.edges if s == v]

    def relabel(self, types) -> DecoratedGraph:
        return replace(self, types=dict(types))


def base_type(sig, loops: int) -> S.TypeSymbol:
    if loops == 0:
        return S.star(sig.genus) if sig.orientable else S.star_c(sig.crosscaps)
    if not sig.orientable:
        variant = "c"
    elif is_planar(sig):
        variant = "plain"
    else:
        variant = "h"
    family = S.O if loops == 1 else S.THETA
    return family.with_variant(variant)


def build_decorated_graph(aut: TopologicalAutomaton) -> DecoratedGraph:
    keep = reachable_blocks(aut)
    keep_set = set(keep)
    loops = Counter(a.source_block for a in aut.arrows if a.is_loop)
    edges = tuple(
        (a.source_block, a.target_block)
        for a in aut.arrows
        if not a.is_loop and a.source_block in keep_set
    )
    types = {k: base_type(aut.blocks[k].signature, loops[k]) for k in keep}
    return DecoratedGraph(tuple(keep), edges, types, {k: loops[k] for k in keep})


def _contributes(sym: S.TypeSymbol):
    """(handle flag, cross-cap flag) a vertex passes up to its ancestors."""
    h = sym.kind in ("oh", "th", S.STAR_INF) or (sym.kind == S.STAR and sym.index >= 1)
    c = sym.kind in ("oc", "tc", S.STAR_C, S.STAR_INF_C)
    return h, c


def propagate(g: DecoratedGraph) -> DecoratedGraph:
    """Promote labels so that handle and cross-cap accumulation is visible upstream.

    Edges go from lower to higher block index, so decreasing index order is a
    reverse topological order and one pass reaches the fixpoint.
    """
    succ = {v: g.successors(v) for v in g.vertices}
    final = {}
    # per vertex: any h-loop, any c-loop, any handle source, any cross-cap source below
    below = {}
    for v in sorted(g.vertices, reverse=True):
        hloop = cloop = hany = cany = False
        for w in succ[v]:
            wh, wc, wha, wca = below[w]
            sym = final[w]
            h, c = _contributes(sym)
            hloop |= wh or sym.kind in ("oh", "th")
            cloop |= wc or sym.kind in ("oc", "tc")
            hany |= wha or h
            cany |= wca or c
        below[v] = (hloop, cloop, hany, cany)

        sym = g.types[v]
        if sym.starred:
            if cloop:
                sym = S.STAR_INF_C_SYM
            elif sym.orientable and hloop:
                sym = S.STAR_INF_SYM
        else:
            want = "c" if cany else "h" if hany else "plain"
            if S.variant_rank(want) > S.variant_rank(sym.variant):
                sym = sym.with_variant(want)
        final[v] = sym
    return g.relabel({v: final[v] for v in g.vertices})


def decorate(aut: TopologicalAutomaton) -> DecoratedGraph:
    return propagate(build_decorated_graph(aut))
