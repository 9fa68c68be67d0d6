"""Canonical string codes for decorated rooted trees.

``code(v) = token(v) + "(" + sorted child codes + ")"``; two trees are
isomorphic (type-preserving, root-fixing) exactly when their codes agree.
"""
from __future__ import annotations

from .symbols import parse_token
from .trees import Tree


def subtree_codes(t: Tree) -> dict:
    codes = {}
    for v in t.postorder():
        kids = sorted(codes[c] for c in t.children[v])
        codes[v] = t.types[v].token + "(" + "".join(kids) + ")"
    return codes


def canonical_code(t: Tree) -> str:
    return subtree_codes(t)[t.root]


def isomorphic(t1: Tree, t2: Tree) -> bool:
    return canonical_code(t1) == canonical_code(t2)


def tree_from_code(code: str) -> Tree:
    """Inverse of :func:`canonical_code` (up to vertex numbering)."""
    types, children = {}, {}
    stack = []
    pos = 0
    root = None
    while pos < len(code):
        if code[pos] == ")":
            if not stack:
                raise ValueError(f"unbalanced ')' at {pos}")
            stack.pop()
            pos += 1
            continue
        sym, pos = parse_token(code, pos)
        if pos >= len(code) or code[pos] != "(":
            raise ValueError(f"expected '(' at {pos} in {code!r}")
        pos += 1
        v = len(types)
        types[v] = sym
        children[v] = []
        if stack:
            children[stack[-1]].append(v)
        elif root is None:
            root = v
        else:
            raise ValueError("code describes more than one tree")
        stack.append(v)
    if stack or root is None:
        raise ValueError(f"incomplete code {code!r}")
    return Tree(root, types, children)
