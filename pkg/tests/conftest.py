import random

import pytest
from hypothesis import strategies as st

from opensurf import symbols as S
from opensurf.automaton import Arrow, BlockSpec, TopologicalAutomaton, check
from opensurf.surface_blocks import SurfaceSignature
from opensurf.trees import Tree

ROOT_SYMBOLS = [S.star(0), S.star(1), S.star(3), S.star_c(1), S.star_c(2),
                S.STAR_INF_SYM, S.STAR_INF_C_SYM]
LOOP_SYMBOLS = [S.O, S.OH, S.OC, S.THETA, S.THETA_H, S.THETA_C]
ALL_SYMBOLS = ROOT_SYMBOLS + LOOP_SYMBOLS

ACCEPTANCE_LINES = []


def random_tree(rng, size, loops=LOOP_SYMBOLS, roots=ROOT_SYMBOLS):
    types = {0: rng.choice(roots)}
    children = {0: []}
    for v in range(1, size):
        parent = rng.randrange(v)
        types[v] = rng.choice(loops)
        children[v] = []
        children[parent].append(v)
    return Tree(0, types, children)


@st.composite
def trees(draw, max_size=12, loops=LOOP_SYMBOLS, roots=ROOT_SYMBOLS, ordinary_starred=False):
    """Random rooted trees; parents are drawn among earlier vertices."""
    size = draw(st.integers(1, max_size))
    pool = loops + roots if ordinary_starred else loops
    types = {0: draw(st.sampled_from(roots))}
    children = {0: []}
    for v in range(1, size):
        parent = draw(st.integers(0, v - 1))
        types[v] = draw(st.sampled_from(pool))
        children[v] = []
        children[parent].append(v)
    return Tree(0, types, children)


def shuffled(t: Tree, seed: int) -> Tree:
    """Same tree with children lists permuted and vertex ids renamed."""
    rng = random.Random(seed)
    ids = list(t.types)
    rng.shuffle(ids)
    rename = dict(zip(t.types, [i + 1000 for i in ids]))
    children = {}
    for v, kids in t.children.items():
        kids = [rename[c] for c in kids]
        rng.shuffle(kids)
        children[rename[v]] = kids
    return Tree(rename[t.root], {rename[v]: s for v, s in t.types.items()}, children)


def random_automaton(rng, n):
    """Random valid automaton on n >= 2 blocks; every block beyond the root
    gets between 0 and 2 loops and up to 2 exits to later blocks."""
    shape = [(0, rng.randint(1, 3))]
    for k in range(1, n):
        loops = rng.choice([0, 0, 1, 2])
        exits = rng.randint(0, 2) if k + 1 < n else 0
        shape.append((loops, exits))
    blocks, incoming, arrows = [], {}, []
    for k, (loops, exits) in enumerate(shape):
        b = exits if k == 0 else 1 + loops + exits
        kind = "planar" if k == 0 else rng.choice(["planar", "orient", "nonorient"])
        sig = (SurfaceSignature.orientable_surface(0, b) if kind == "planar" else
               SurfaceSignature.orientable_surface(rng.randint(1, 2), b) if kind == "orient" else
               SurfaceSignature.nonorientable_surface(rng.randint(1, 2), b))
        blocks.append(BlockSpec.from_signature(sig))
        first = 0 if k == 0 else 1
        for x in range(first, first + loops):
            arrows.append(Arrow(k, x, k))
        for x in range(first + loops, b):
            arrows.append(Arrow(k, x, rng.randint(k + 1, n - 1)))
        if k:
            incoming[k] = 0
    return check(TopologicalAutomaton(tuple(blocks), incoming, tuple(arrows)))


def random_automata(count, seed=5, max_blocks=6):
    rng = random.Random(seed)
    return [random_automaton(rng, rng.randint(2, max_blocks)) for _ in range(count)]


@pytest.fixture
def rng():
    return random.Random(20261019)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
