"""Graphviz export of decorated graphs and trees.

Output is deterministic: graph vertices in block order, tree vertices renamed
in canonical preorder, so isomorphic trees give byte-identical text.
"""
from __future__ import annotations

from .canonical import subtree_codes
from .decoration import DecoratedGraph
from .trees import Tree


def _graph_dot(g: DecoratedGraph, name: str) -> str:
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        lines.append(f'  X{v} [label="X{v}: {g.types[v].token}"];')
    for s, t in g.edges:
        lines.append(f"  X{s} -> X{t};")
    for v in g.vertices:
        for _ in range(g.loop_counts.get(v, 0)):
            lines.append(f"  X{v} -> X{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _tree_dot(t: Tree, name: str) -> str:
    codes = subtree_codes(t)
    order = t.preorder(key=lambda c: codes[c])
    ids = {v: i for i, v in enumerate(order)}
    lines = [f"digraph {name} {{"]
    for v in order:
        lines.append(f'  n{ids[v]} [label="{t.types[v].token}"];')
    for v in order:
        for c in sorted(t.children[v], key=lambda c: ids[c]):
            lines.append(f"  n{ids[v]} -> n{ids[c]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(obj, name: str | None = None) -> str:
    if isinstance(obj, DecoratedGraph):
        return _graph_dot(obj, name or "decorated")
    if isinstance(obj, Tree):
        return _tree_dot(obj, name or "tree")
    raise TypeError(f"cannot export {type(obj).__name__} to DOT")
