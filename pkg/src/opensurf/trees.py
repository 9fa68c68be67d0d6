"""Rooted decorated trees with unordered children."""
from __future__ import annotations

from dataclasses import dataclass, field

from .symbols import TypeSymbol, symbol


@dataclass
class Tree:
    root: int
    types: dict
    children: dict
    origin: dict = field(default_factory=dict)   # vertex -> block it was copied from

    @classmethod
    def single(cls, sym: TypeSymbol) -> Tree:
        return cls(0, {0: sym}, {0: []})

    @classmethod
    def from_nested(cls, spec) -> Tree:
        """Build from ``(token, [child_spec, ...])`` pairs; tokens may be symbols or strings."""
        types, children = {}, {}
        stack = [(spec, None)]
        while stack:
            (sym, kids), parent = stack.pop()
            v = len(types)
            types[v] = symbol(sym) if isinstance(sym, str) else sym
            children[v] = []
            if parent is not None:
                children[parent].append(v)
            for kid in reversed(kids):
                stack.append((kid, v))
        return cls(0, types, children)

    def copy(self) -> Tree:
        return Tree(
            self.root,
            dict(self.types),
            {v: list(c) for v, c in self.children.items()},
            dict(self.origin),
        )

    def __len__(self):
        return len(self.types)

    def vertices(self):
        return self.types.keys()

    def parents(self) -> dict:
        out = {self.root: None}
        for v, kids in self.children.items():
            for c in kids:
                out[c] = v
        return out

    def preorder(self, start=None, key=None) -> list[int]:
        start = self.root if start is None else start
        out = []
        stack = [start]
        while stack:
            v = stack.pop()
            out.append(v)
            kids = self.children[v]
            if key is not None:
                kids = sorted(kids, key=key)
            stack.extend(reversed(kids))
        return out

    def postorder(self) -> list[int]:
        return list(reversed(self.preorder()))   # children before parents

    def depths(self) -> dict:
        d = {self.root: 0}
        for v in self.preorder():
            for c in self.children[v]:
                d[c] = d[v] + 1
        return d

    def subtree(self, v) -> list[int]:
        return self.preorder(v)

    def remove_subtree(self, v, parents=None):
        """Delete ``v`` and its descendants in place."""
        parents = self.parents() if parents is None else parents
        p = parents[v]
        self.children[p].remove(v)
        for w in self.preorder(v):
            del self.types[w]
            del self.children[w]
            self.origin.pop(w, None)

    def ordinary(self) -> list[int]:
        return [v for v in self.types if v != self.root]

    def leaves(self) -> list[int]:
        return [v for v, kids in self.children.items() if not kids]


def is_admissible(t: Tree) -> bool:
    if not t.types[t.root].starred:
        return False
    return all(t.types[v].loop_kind for v in t.ordinary())
