"""Independent checks on the reduction.

``cb_invariant`` classifies the countable end spaces presented by trees whose
ordinary vertices are all plain ``O``: such a space is ``omega^r * m + 1``.
``gen_appendix`` builds automata whose end spaces are a Cantor set decorated
by countable pieces of prescribed ranks.  ``confluence_check`` compares random
maximal move sequences with the deterministic reduction.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import symbols as S
from .automaton import Arrow, BlockSpec, TopologicalAutomaton
from .canonical import canonical_code
from .reduce import random_reduce, reduce
from .surface_blocks import SurfaceSignature
from .trees import Tree


class NotLoopOnly(ValueError):
    pass


@dataclass(frozen=True)
class CBInvariant:
    rank: int
    multiplicity: int

    def __str__(self):
        return f"omega^{self.rank}*{self.multiplicity}+1"


def cb_invariant(t: Tree) -> CBInvariant:
    for v in t.ordinary():
        if t.types[v] != S.O:
            raise NotLoopOnly(f"vertex {v} has type {t.types[v]}, only plain o is supported")
    if not t.children[t.root]:
        raise NotLoopOnly("tree has no ordinary vertex; the end space is empty")
    rank = {}
    for v in t.postorder():
        kids = t.children[v]
        rank[v] = 1 + max(rank[c] for c in kids) if kids else 0
    tops = [rank[c] for c in t.children[t.root]]
    r = max(tops)
    return CBInvariant(r, tops.count(r))


# ---------------------------------------------------------------- enumeration

@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple:
    """All unlabeled rooted trees with ``n`` vertices, as sorted nested tuples."""
    if n == 1:
        return ((),)
    out = set()
    for forest in _forests(n - 1, n - 1):
        out.add(tuple(sorted(forest)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _forests(n: int, max_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for shape in _shapes(first):
            for rest in _forests(n - first, first):
                out.append((shape,) + rest)
    return tuple(out)


def rooted_shapes(max_vertices: int) -> list:
    return [s for n in range(1, max_vertices + 1) for s in _shapes(n)]


def shape_to_tree(shape, root=S.star(0), ordinary=S.O) -> Tree:
    def spec(s, sym):
        return (sym, [spec(c, ordinary) for c in s])
    return Tree.from_nested(spec(shape, root))


def loop_only_trees(max_vertices: int) -> list[Tree]:
    """Every tree ``s0`` -> plain ``o`` vertices with 2..max_vertices vertices."""
    return [shape_to_tree(s) for s in rooted_shapes(max_vertices) if s]


# ------------------------------------------------------------------ appendix

def _planar(boundaries):
    return BlockSpec.from_signature(SurfaceSignature.orientable_surface(0, boundaries))


def gen_appendix(bits) -> TopologicalAutomaton:
    """Automaton for a Cantor set carrying, for each set bit ``k``, a
    sub-Cantor set whose points are limits of rank ``k - 1`` chains.

    Blocks: disk root; hub (incoming, two loops, one exit per set bit); per
    set bit a spacer (incoming, two loops, one exit) followed by ``k`` one-loop
    blocks, the last one an annulus.
    """
    bits = [int(b) for b in bits]
    if not bits or any(b not in (0, 1) for b in bits):
        raise ValueError("bits must be a nonempty sequence of 0/1")
    ks = [k for k, b in enumerate(bits, start=1) if b]
    blocks = [_planar(1), _planar(3 + len(ks))]
    incoming = {1: 0}
    arrows = [Arrow(0, 0, 1), Arrow(1, 1, 1), Arrow(1, 2, 1)]
    for exit_no, k in enumerate(ks):
        spacer = len(blocks)
        blocks.append(_planar(4))
        incoming[spacer] = 0
        arrows.append(Arrow(1, 3 + exit_no, spacer))
        arrows += [Arrow(spacer, 1, spacer), Arrow(spacer, 2, spacer)]
        prev, prev_exit = spacer, 3
        for i in range(k):
            last = i == k - 1
            b = len(blocks)
            blocks.append(_planar(2 if last else 3))
            incoming[b] = 0
            arrows.append(Arrow(prev, prev_exit, b))
            arrows.append(Arrow(b, 1, b))
            prev, prev_exit = b, 2
    return TopologicalAutomaton(tuple(blocks), incoming, tuple(arrows))


# ---------------------------------------------------------------- confluence

@dataclass(frozen=True)
class ConfluenceReport:
    confluent: bool
    seed: int
    trials: int
    expected: str
    terminals: tuple   # distinct terminal codes observed


def confluence_report(t: Tree, trials: int, seed: int) -> ConfluenceReport:
    expected = canonical_code(reduce(t))
    rng = random.Random(seed)
    seen = set()
    for _ in range(trials):
        seen.add(canonical_code(random_reduce(t, rng)))
    return ConfluenceReport(seen <= {expected}, seed, trials, expected, tuple(sorted(seen)))


def confluence_check(t: Tree, trials: int, seed: int) -> bool:
    return confluence_report(t, trials, seed).confluent
