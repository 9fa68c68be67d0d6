"""Moves 1', 2 and 3 on admissible trees and reduction to normal form.

* M1 ``(v', v)``: ``v`` is a Theta-family vertex, the only son of a non-root
  loop vertex ``v'`` of the same variant class; ``v`` replaces ``v'``.
* M2 ``(v1, v2, v3)``: ``v2`` a son of ``v1``, ``v3`` a descendant at depth
  >= 2 below ``v1`` with ``T(v2)`` isomorphic to ``T(v3)``; delete ``T(v2)``.
* M3 ``(v1, v2, v3)``: distinct isomorphic sons of ``v1``, where ``v1`` is not
  the root or the sons are Theta-family; delete ``T(v3)``.

Each move removes at least one vertex, so any maximal sequence is finite.
"""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator

from .canonical import canonical_code, subtree_codes
from .trees import Tree

M1, M2, M3 = "M1", "M2", "M3"
PHASES = (M1, M2, M3)


class InapplicableMove(ValueError):
    pass


@dataclass(frozen=True)
class Move:
    kind: str
    refs: tuple

    @property
    def target(self) -> int:
        """The vertex whose removal the move performs."""
        if self.kind == M1:
            return self.refs[0]
        if self.kind == M2:
            return self.refs[1]
        return self.refs[2]

    def __str__(self):
        return f"{self.kind}{self.refs}"


class _Index:
    """Per-tree data shared by the move finders."""

    def __init__(self, t: Tree):
        self.t = t
        self.codes = subtree_codes(t)
        self.parents = t.parents()
        self.depth = {}
        self.enter = {}
        self.leave = {}
        clock = 0
        stack = [(t.root, 0, False)]
        while stack:
            v, d, done = stack.pop()
            if done:
                self.leave[v] = clock
                continue
            self.depth[v] = d
            self.enter[v] = clock
            clock += 1
            stack.append((v, d, True))
            for c in t.children[v]:
                stack.append((c, d + 1, False))

    def is_descendant(self, u, v) -> bool:
        """``u`` strictly below ``v``."""
        return self.enter[v] < self.enter[u] < self.leave[v]


def _m1(ix: _Index) -> list[Move]:
    t = ix.t
    out = []
    for v, sym in t.types.items():
        if v == t.root or not sym.theta:
            continue
        vp = ix.parents[v]
        if vp == t.root or len(t.children[vp]) != 1:
            continue
        psym = t.types[vp]
        if psym.loop_kind and psym.variant == sym.variant:
            out.append(Move(M1, (vp, v)))
    return out


def _m2(ix: _Index) -> list[Move]:
    t = ix.t
    groups = defaultdict(list)
    for v in t.types:
        if v != t.root:
            groups[ix.codes[v]].append(v)
    out = []
    for members in groups.values():
        if len(members) < 2:
            continue
        for v2 in members:
            v1 = ix.parents[v2]
            for v3 in members:
                if v3 != v2 and ix.depth[v3] - ix.depth[v1] >= 2 and ix.is_descendant(v3, v1):
                    out.append(Move(M2, (v1, v2, v3)))
    return out


def _m3(ix: _Index) -> list[Move]:
    t = ix.t
    out = []
    for v1, kids in t.children.items():
        if len(kids) < 2:
            continue
        by_code = defaultdict(list)
        for c in kids:
            by_code[ix.codes[c]].append(c)
        for same in by_code.values():
            if len(same) < 2:
                continue
            if v1 == t.root and not t.types[same[0]].theta:
                continue
            for v2 in same:
                for v3 in same:
                    if v2 != v3:
                        out.append(Move(M3, (v1, v2, v3)))
    return out


_FINDERS = {M1: _m1, M2: _m2, M3: _m3}


def applicable_moves(t: Tree, kinds=PHASES) -> list[Move]:
    ix = _Index(t)
    out = []
    for k in kinds:
        out.extend(_FINDERS[k](ix))
    return out


def is_applicable(t: Tree, m: Move) -> bool:
    return m in applicable_moves(t, (m.kind,))


def _apply(t: Tree, m: Move, parents=None) -> Tree:
    out = t.copy()
    if m.kind == M1:
        vp, v = m.refs
        parents = out.parents() if parents is None else parents
        g = parents[vp]
        siblings = out.children[g]
        siblings[siblings.index(vp)] = v
        del out.types[vp]
        del out.children[vp]
        out.origin.pop(vp, None)
    else:
        out.remove_subtree(m.target, parents)
    return out


def apply_move(t: Tree, m: Move) -> Tree:
    if not is_applicable(t, m):
        raise InapplicableMove(f"{m} does not apply")
    return _apply(t, m)


def _least(ix: _Index, moves):
    codes = ix.codes
    order = ix.t.preorder(key=lambda c: (codes[c], c))
    pos = {v: i for i, v in enumerate(order)}
    return min(moves, key=lambda m: (pos[m.target], tuple(pos[r] for r in m.refs)))


def reduction_steps(t: Tree) -> Iterator[tuple[Move, Tree]]:
    """Yield ``(move, tree_after)`` for the deterministic reduction schedule.

    Phases M1, M2, M3 are each run to exhaustion in turn, repeating until a
    full round applies nothing.  Within a phase the move removing the vertex
    earliest in canonical preorder goes first.
    """
    cur = t
    while True:
        progressed = False
        for kind in PHASES:
            while True:
                ix = _Index(cur)
                moves = _FINDERS[kind](ix)
                if not moves:
                    break
                m = _least(ix, moves)
                cur = _apply(cur, m, ix.parents)
                progressed = True
                yield m, cur
        if not progressed:
            return


def reduce(t: Tree) -> Tree:
    cur = t
    for _, cur in reduction_steps(t):
        pass
    return cur


def is_reduced(t: Tree) -> bool:
    return not applicable_moves(t)


def random_reduce(t: Tree, rng: random.Random) -> Tree:
    """Apply uniformly chosen applicable moves until none remains."""
    cur = t
    while True:
        ix = _Index(cur)
        moves = _m1(ix) + _m2(ix) + _m3(ix)
        if not moves:
            return cur
        cur = _apply(cur, rng.choice(moves), ix.parents)


def reduced_code(t: Tree) -> str:
    return canonical_code(reduce(t))
