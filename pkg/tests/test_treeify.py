import itertools
import random
from collections import Counter
from functools import lru_cache

import pytest

from opensurf import symbols as S
from opensurf import triangulations as T
from opensurf.canonical import canonical_code, tree_from_code
from opensurf.decoration import DecoratedGraph, decorate
from opensurf.pipeline import FIXTURES, fixture
from opensurf.surface_blocks import triangulation_signature
from opensurf.treeify import SizeCapExceeded, admissibilize, merge_types, unfold
from opensurf.trees import Tree, is_admissible

from conftest import random_automata


def duplicate_until_tree(g: DecoratedGraph) -> Tree:
    """Oracle: while some vertex has two incoming edges, give one of those
    edges a private copy of the vertex (with copies of its out-edges)."""
    types = dict(g.types)
    edges = list(g.edges)
    nxt = max(types) + 1
    while True:
        indeg = Counter(v for _, v in edges)
        shared = sorted(v for v, n in indeg.items() if n > 1)
        if not shared:
            break
        y = shared[0]
        i = next(i for i, (_, v) in enumerate(edges) if v == y)
        y2 = nxt
        nxt += 1
        types[y2] = types[y]
        edges[i] = (edges[i][0], y2)
        edges += [(y2, w) for u, w in list(edges) if u == y]
    children = {v: [] for v in types}
    for u, v in edges:
        children[u].append(v)
    reach = set()
    stack = [g.root]
    while stack:
        v = stack.pop()
        reach.add(v)
        stack.extend(children[v])
    return Tree(g.root, {v: types[v] for v in reach}, {v: children[v] for v in reach})


def count_maximal_paths(g: DecoratedGraph) -> int:
    succ = {v: g.successors(v) for v in g.vertices}

    @lru_cache(maxsize=None)
    def paths(v):
        return 1 if not succ[v] else sum(paths(w) for w in succ[v])

    return paths(g.root)


def graph(types, edges):
    types = {v: S.symbol(t) for v, t in types.items()}
    loops = {v: (0 if s.starred else 1 if s.family == "o" else 2) for v, s in types.items()}
    return DecoratedGraph(tuple(sorted(types)), tuple(edges), types, loops)


CHAIN = graph({0: "s0", 1: "o", 2: "o", 3: "t"}, [(0, 1), (1, 2), (2, 3)])
DIAMOND = graph({0: "s0", 1: "o", 2: "t", 3: "oh"}, [(0, 1), (0, 2), (1, 3), (2, 3)])
DOUBLE = graph({0: "s0", 1: "o", 2: "t"}, [(0, 1), (0, 1), (1, 2)])


class TestUnfold:
    def test_chain_is_unchanged(self):
        assert canonical_code(unfold(CHAIN)) == "s0(o(o(t())))"

    def test_diamond_duplicates_shared_vertex(self):
        assert canonical_code(unfold(DIAMOND)) == "s0(o(oh())t(oh()))"

    def test_double_edge_gives_two_children(self):
        assert canonical_code(unfold(DOUBLE)) == "s0(o(t())o(t()))"

    @pytest.mark.parametrize("g", [CHAIN, DIAMOND, DOUBLE])
    def test_matches_duplication_oracle(self, g):
        assert canonical_code(unfold(g)) == canonical_code(duplicate_until_tree(g))

    @pytest.mark.parametrize("name", FIXTURES)
    def test_fixtures_match_oracle(self, name):
        g = decorate(fixture(name))
        t = unfold(g)
        assert canonical_code(t) == canonical_code(duplicate_until_tree(g))
        assert len(t.leaves()) == count_maximal_paths(g)

    @pytest.mark.parametrize("aut", random_automata(40, seed=11))
    def test_random_automata_match_oracle(self, aut):
        g = decorate(aut)
        t = unfold(g)
        assert canonical_code(t) == canonical_code(duplicate_until_tree(g))
        assert len(t.leaves()) == count_maximal_paths(g)

    def test_origins_point_to_blocks(self):
        t = unfold(DIAMOND)
        assert all(t.types[v] == DIAMOND.types[t.origin[v]] for v in t.types)

    def test_cap(self):
        # layered DAG with 2^12 root paths
        n = 12
        types = {0: "s0", **{k: "o" for k in range(1, n + 1)}}
        edges = [(k, k + 1) for k in range(n)] + [(k, k + 1) for k in range(n)]
        with pytest.raises(SizeCapExceeded):
            unfold(graph(types, edges), max_vertices=1000)


def closed(sym):
    if sym.kind == S.STAR:
        return T.closed_orientable(sym.index)
    return T.closed_nonorientable(sym.index)


def symbol_of(sig):
    return S.star(sig.genus) if sig.orientable else S.star_c(sig.crosscaps)


FINITE = [S.star(i) for i in range(3)] + [S.star_c(j) for j in range(1, 4)]


class TestMergeTypes:
    @pytest.mark.parametrize("a,b,expected", [
        ("s1", "s2", "s3"),
        ("s1", "sc1", "sc3"),
        ("sc1", "sc2", "sc3"),
        ("s0", "sinf", "sinf"),
        ("sinf", "sinf", "sinf"),
        ("s2", "sinfc", "sinfc"),
        ("sinf", "sinfc", "sinfc"),
        ("sc3", "sinfc", "sinfc"),
        ("sinf", "sc3", "sc1"),
        ("sinf", "sc2", "sc2"),
    ])
    def test_table(self, a, b, expected):
        assert merge_types(S.symbol(a), S.symbol(b)) == S.symbol(expected)
        assert merge_types(S.symbol(b), S.symbol(a)) == S.symbol(expected)

    @pytest.mark.parametrize("a,b", list(itertools.combinations_with_replacement(FINITE, 2)))
    def test_finite_merge_is_connected_sum(self, a, b):
        tris = T.connected_sum(closed(a), closed(b))
        sig = triangulation_signature(T.Triangulation.from_triangles(tris))
        assert merge_types(a, b) == symbol_of(sig)

    def test_rejects_loop_symbols(self):
        with pytest.raises(ValueError):
            merge_types(S.O, S.star(1))


class TestAdmissibilize:
    @pytest.mark.parametrize("code,expected", [
        ("s0(s1(o())o())", "s1(o()o())"),
        ("s2(sc1(t()))", "sc5(t())"),
        ("s0(o(s1(o())))", "s0(o(o()))"),
        ("s1(s1(s1()))", "s3()"),
        ("sc1(oh())", "sc1(oh())"),
        ("sc3(oh())", "sc1(oh())"),
        ("s1(oh())", "sinf(oh())"),
        ("s0(oc())", "sinfc(oc())"),
    ])
    def test_examples(self, code, expected):
        out = admissibilize(tree_from_code(code))
        assert is_admissible(out)
        assert canonical_code(out) == expected

    @pytest.mark.parametrize("aut", random_automata(40, seed=23))
    def test_order_independent(self, aut):
        t = unfold(decorate(aut))
        base = canonical_code(admissibilize(t))
        rng = random.Random(len(t))
        for _ in range(5):
            assert canonical_code(admissibilize(t, order=_random_bottom_up(t, rng))) == base

    @pytest.mark.parametrize("aut", random_automata(40, seed=29))
    def test_loop_types_preserved(self, aut):
        t = unfold(decorate(aut))
        out = admissibilize(t)
        before = Counter(t.types[v] for v in t.ordinary() if t.types[v].loop_kind)
        after = Counter(out.types[v] for v in out.ordinary())
        assert before == after
        assert is_admissible(out)


def _random_bottom_up(t, rng):
    """A random order in which every vertex comes after all of its children."""
    pending = {v: len(kids) for v, kids in t.children.items()}
    parents = t.parents()
    ready = [v for v, n in pending.items() if n == 0]
    out = []
    while ready:
        v = ready.pop(rng.randrange(len(ready)))
        out.append(v)
        p = parents[v]
        if p is not None:
            pending[p] -= 1
            if pending[p] == 0:
                ready.append(p)
    return out
