"""From the decorated DAG to an admissible tree.

``unfold`` replaces the DAG by its tree of root paths (the fixpoint of
duplicating shared subgraphs); ``admissibilize`` then merges every non-root
starred vertex into its father using connected-sum arithmetic.
"""
from __future__ import annotations

from . import symbols as S
from .decoration import DecoratedGraph
from .symbols import TypeSymbol
from .trees import Tree

DEFAULT_MAX_UNFOLD = 1_000_000


class SizeCapExceeded(ValueError):
    pass


def unfold(g: DecoratedGraph, *, max_vertices: int = DEFAULT_MAX_UNFOLD) -> Tree:
    succ = {v: g.successors(v) for v in g.vertices}
    types = {0: g.types[g.root]}
    children = {0: []}
    origin = {0: g.root}
    stack = [(0, g.root)]
    while stack:
        tv, gv = stack.pop()
        for w in succ[gv]:
            if len(types) >= max_vertices:
                raise SizeCapExceeded(f"unfolded tree exceeds {max_vertices} vertices")
            n = len(types)
            types[n] = g.types[w]
            children[n] = []
            origin[n] = w
            children[tv].append(n)
            stack.append((n, w))
    return Tree(0, types, children, origin)


def merge_types(father: TypeSymbol, son: TypeSymbol) -> TypeSymbol:
    """Type of the vertex obtained by absorbing a starred son into a starred father.

    Finite parts add as connected sums (a handle next to a cross-cap counts as
    two cross-caps).  An infinite orientable part absorbs orientable pieces;
    with finitely many cross-caps only their parity survives, returned as
    ``sc1``/``sc2`` (the infinite genus is carried by the h-vertices below).
    """
    if not (father.starred and son.starred):
        raise ValueError("merge_types needs two starred symbols")
    a, b = sorted((father, son))
    if S.STAR_INF_C in (a.kind, b.kind):
        return S.STAR_INF_C_SYM
    if a.kind == S.STAR and b.kind == S.STAR:
        return S.star(a.index + b.index)
    if a.kind == S.STAR and b.kind == S.STAR_C:
        return S.star_c(b.index + 2 * a.index)
    if a.kind == S.STAR_C and b.kind == S.STAR_C:
        return S.star_c(a.index + b.index)
    if a.kind == S.STAR and b.kind == S.STAR_INF:
        return S.STAR_INF_SYM
    if a.kind == S.STAR_INF and b.kind == S.STAR_INF:
        return S.STAR_INF_SYM
    # STAR_INF with STAR_C
    return S.star_c(_parity(b.index))


def _parity(crosscaps: int) -> int:
    return 1 if crosscaps % 2 else 2


def settle_root(t: Tree) -> Tree:
    """Normalise the root label against what survives in the ordinary tree.

    Handle or cross-cap ordinary vertices mean infinitely many handles; a
    nonorientable finite root then only keeps its cross-cap parity.
    """
    kinds = {t.types[v].kind for v in t.ordinary()}
    root = t.types[t.root]
    if kinds & {"oc", "tc"}:
        new = S.STAR_INF_C_SYM
    elif kinds & {"oh", "th"}:
        if root.kind == S.STAR_C:
            new = S.star_c(_parity(root.index))
        elif root.kind == S.STAR:
            new = S.STAR_INF_SYM
        else:
            new = root
    else:
        new = root
    if new == root:
        return t
    out = t.copy()
    out.types[out.root] = new
    return out


def admissibilize(t: Tree, order=None) -> Tree:
    """Merge every non-root starred vertex into its father.

    Vertices are handled deepest first, so when ``x`` is merged its subtree is
    already free of starred vertices.  ``order`` may supply another
    children-before-parents processing order (used by tests).
    """
    out = t.copy()
    parents = out.parents()
    for x in (order if order is not None else out.postorder()):
        if x == out.root or not out.types[x].starred:
            continue
        p = parents[x]
        if out.types[p].starred:
            out.types[p] = merge_types(out.types[p], out.types[x])
        kids = out.children.pop(x)
        siblings = out.children[p]
        i = siblings.index(x)
        siblings[i:i + 1] = kids
        for c in kids:
            parents[c] = p
        del out.types[x]
        del parents[x]
        out.origin.pop(x, None)
    return settle_root(out)
