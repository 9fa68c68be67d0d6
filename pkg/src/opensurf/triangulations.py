"""Explicit triangulations of standard surfaces.

Closed surfaces are built as connected sums of small vertex-minimal
triangulations (octahedron, 7-vertex torus, 6-vertex projective plane);
holes are cut by deleting vertex-disjoint triangles, subdividing first
when there are not enough of them.
"""
from __future__ import annotations

from .surface_blocks import SurfaceSignature, Triangulation

OCTAHEDRON = (
    (0, 2, 4), (2, 1, 4), (1, 3, 4), (3, 0, 4),
    (2, 0, 5), (1, 2, 5), (3, 1, 5), (0, 3, 5),
)

TORUS_7 = tuple(
    t for i in range(7)
    for t in (((i) % 7, (i + 1) % 7, (i + 3) % 7), ((i) % 7, (i + 3) % 7, (i + 2) % 7))
)

RP2_6 = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
    (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
)

DISK = ((0, 1, 2),)

MOBIUS_5 = ((0, 1, 2), (1, 2, 3), (2, 3, 4), (3, 4, 0), (4, 0, 1))

# square ring: outer square 0..3, inner square 4..7
ANNULUS_8 = tuple(
    t for i in range(4)
    for t in ((i, (i + 1) % 4, 4 + i), ((i + 1) % 4, 4 + (i + 1) % 4, 4 + i))
)


def _offset(triangles, k):
    return [tuple(v + k for v in t) for t in triangles]


def connected_sum(a, b):
    """Glue two closed triangulated surfaces along the boundary of a removed triangle."""
    a = [tuple(t) for t in a]
    shift = max(v for t in a for v in t) + 1
    b = _offset(b, shift)
    ta, tb = a[-1], b[0]
    # identify tb's vertices with ta's, reversing orientation so orientable sums stay orientable
    ident = {tb[0]: ta[0], tb[1]: ta[2], tb[2]: ta[1]}
    glued = a[:-1] + [tuple(ident.get(v, v) for v in t) for t in b[1:]]
    labels = {v: i for i, v in enumerate(sorted({v for t in glued for v in t}))}
    return [tuple(labels[v] for v in t) for t in glued]


def subdivide(triangles):
    """Split each triangle into four through edge midpoints."""
    nxt = max(v for t in triangles for v in t) + 1
    mid = {}

    def m(x, y):
        nonlocal nxt
        key = (min(x, y), max(x, y))
        if key not in mid:
            mid[key] = nxt
            nxt += 1
        return mid[key]

    out = []
    for a, b, c in triangles:
        ab, bc, ca = m(a, b), m(b, c), m(c, a)
        out += [(a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca)]
    return out


def _disjoint_triangles(triangles, count):
    used = set()
    picked = []
    for i, t in enumerate(triangles):
        if len(picked) == count:
            break
        if used.isdisjoint(t):
            picked.append(i)
            used.update(t)
    return picked if len(picked) == count else None


def punch(triangles, holes):
    """Remove ``holes`` vertex-disjoint triangles from a closed surface."""
    triangles = list(triangles)
    while True:
        picked = _disjoint_triangles(triangles, holes)
        if picked is not None:
            drop = set(picked)
            return [t for i, t in enumerate(triangles) if i not in drop]
        triangles = subdivide(triangles)


def closed_orientable(genus):
    if genus == 0:
        return list(OCTAHEDRON)
    tris = list(TORUS_7)
    for _ in range(genus - 1):
        tris = connected_sum(tris, TORUS_7)
    return tris


def closed_nonorientable(crosscaps):
    tris = list(RP2_6)
    for _ in range(crosscaps - 1):
        tris = connected_sum(tris, RP2_6)
    return tris


def triangulate(sig: SurfaceSignature) -> Triangulation:
    """Some triangulation realising ``sig``; boundary-free inputs give closed surfaces."""
    if sig.orientable:
        closed = closed_orientable(sig.genus)
    else:
        closed = closed_nonorientable(sig.crosscaps)
    return Triangulation.from_triangles(punch(closed, sig.boundary_count))


def orientable(genus: int, boundaries: int) -> Triangulation:
    return triangulate(SurfaceSignature.orientable_surface(genus, boundaries))


def nonorientable(crosscaps: int, boundaries: int) -> Triangulation:
    return triangulate(SurfaceSignature.nonorientable_surface(crosscaps, boundaries))
