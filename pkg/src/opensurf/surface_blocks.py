"""Triangulated compact surfaces-with-boundary and their classification data.

A block is accepted either as an explicit triangulation or as an abstract
:class:`SurfaceSignature`.  Triangulations are validated combinatorially
(edge degrees, vertex fans, connectivity) and reduced to a signature.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable


class SurfaceError(ValueError):
    """Raised when a simplicial complex is not a compact connected surface."""


class InvalidTriangulation(SurfaceError):
    pass


class EdgeOveruse(SurfaceError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge {edge} lies in three or more triangles")


class PinchedVertex(SurfaceError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has a link that is not a single fan")


class Disconnected(SurfaceError):
    def __init__(self, simplex):
        self.simplex = simplex
        super().__init__(f"complex is disconnected; {simplex} is not reachable from the first triangle")


class Empty(SurfaceError):
    def __init__(self):
        super().__init__("triangulation has no triangles")


def _rotate_min_first(tri):
    i = tri.index(min(tri))
    return tri[i:] + tri[:i]


@dataclass(frozen=True)
class Triangulation:
    """Vertices and oriented triangles.

    Triangles are stored rotated so that the smallest vertex comes first and
    the list is sorted.  Rotation is an even permutation, so the orientation
    each triangle carries is kept; equality is therefore independent of how
    the input was listed.
    """

    vertices: frozenset
    triangles: tuple

    def __post_init__(self):
        verts = frozenset(self.vertices)
        tris = []
        seen = set()
        for raw in self.triangles:
            tri = tuple(raw)
            if len(tri) != 3:
                raise InvalidTriangulation(f"triangle {tri} does not have three vertices")
            for v in tri:
                if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                    raise InvalidTriangulation(f"vertex id {v!r} is not a nonnegative integer")
                if v not in verts:
                    raise InvalidTriangulation(f"triangle {tri} uses unknown vertex {v}")
            if len(set(tri)) != 3:
                raise InvalidTriangulation(f"triangle {tri} repeats a vertex")
            key = frozenset(tri)
            if key in seen:
                raise InvalidTriangulation(f"triangle {tri} duplicates another triangle")
            seen.add(key)
            tris.append(_rotate_min_first(tri))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "triangles", tuple(sorted(tris)))

    @classmethod
    def from_triangles(cls, triangles: Iterable) -> Triangulation:
        triangles = [tuple(t) for t in triangles]
        return cls(frozenset(v for t in triangles for v in t), tuple(triangles))

    def relabel(self, mapping) -> Triangulation:
        """Rename vertices through ``mapping`` (a dict or callable)."""
        f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        return Triangulation(
            frozenset(f(v) for v in self.vertices),
            tuple(tuple(f(v) for v in t) for t in self.triangles),
        )


@dataclass(frozen=True)
class SurfaceSignature:
    orientable: bool
    genus: int
    crosscaps: int
    boundary_count: int
    euler_characteristic: int

    def __post_init__(self):
        if self.boundary_count < 0:
            raise ValueError("boundary_count must be nonnegative")
        if self.orientable:
            if self.genus < 0 or self.crosscaps != 0:
                raise ValueError("orientable signature needs genus >= 0 and no cross-caps")
            expected = 2 - 2 * self.genus - self.boundary_count
        else:
            if self.crosscaps < 1 or self.genus != 0:
                raise ValueError("nonorientable signature needs crosscaps >= 1 and genus 0")
            expected = 2 - self.crosscaps - self.boundary_count
        if self.euler_characteristic != expected:
            raise ValueError(
                f"euler characteristic {self.euler_characteristic} inconsistent with "
                f"genus/crosscaps and {self.boundary_count} boundaries (expected {expected})"
            )

    @classmethod
    def orientable_surface(cls, genus: int, boundaries: int) -> SurfaceSignature:
        return cls(True, genus, 0, boundaries, 2 - 2 * genus - boundaries)

    @classmethod
    def nonorientable_surface(cls, crosscaps: int, boundaries: int) -> SurfaceSignature:
        return cls(False, 0, crosscaps, boundaries, 2 - crosscaps - boundaries)


@dataclass(frozen=True)
class BoundaryComponent:
    cycle: tuple
    index: int


@dataclass(frozen=True)
class ValidatedSurface:
    """A triangulation known to be a connected compact surface-with-boundary."""

    triangulation: Triangulation
    edges: frozenset
    boundary_edges: frozenset
    boundaries: tuple = field(default=())


def _edge(a, b):
    return (a, b) if a < b else (b, a)


def _edge_map(triangles):
    edge_tris = defaultdict(list)
    for i, (a, b, c) in enumerate(triangles):
        for e in (_edge(a, b), _edge(b, c), _edge(a, c)):
            edge_tris[e].append(i)
    return edge_tris


def _fan_ok(link_edges):
    """The link of a vertex must be one path or one cycle."""
    adj = defaultdict(set)
    for a, b in link_edges:
        adj[a].add(b)
        adj[b].add(a)
    if any(len(n) > 2 for n in adj.values()):
        return False
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for n in adj[stack.pop()]:
            if n not in seen:
                seen.add(n)
                stack.append(n)
    return len(seen) == len(adj)


def _boundary_cycles(boundary_edges):
    adj = defaultdict(list)
    for a, b in boundary_edges:
        adj[a].append(b)
        adj[b].append(a)
    cycles = []
    seen = set()
    for start in sorted(adj):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        prev, cur = start, min(adj[start])
        while cur != start:
            cycle.append(cur)
            seen.add(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cycle))
    # starting from the sorted minimum already orders cycles by smallest vertex
    return tuple(BoundaryComponent(c, i) for i, c in enumerate(cycles))


def validate_triangulation(tri: Triangulation) -> ValidatedSurface:
    triangles = tri.triangles
    if not triangles:
        raise Empty()
    edge_tris = _edge_map(triangles)
    for e in sorted(edge_tris):
        if len(edge_tris[e]) > 2:
            raise EdgeOveruse(e)

    links = defaultdict(list)
    for a, b, c in triangles:
        links[a].append((b, c))
        links[b].append((a, c))
        links[c].append((a, b))
    for v in sorted(tri.vertices):
        if v not in links:
            raise Disconnected(v)
        if not _fan_ok(links[v]):
            raise PinchedVertex(v)

    adjacency = defaultdict(list)
    for ts in edge_tris.values():
        if len(ts) == 2:
            adjacency[ts[0]].append(ts[1])
            adjacency[ts[1]].append(ts[0])
    seen = {0}
    queue = deque([0])
    while queue:
        for n in adjacency[queue.popleft()]:
            if n not in seen:
                seen.add(n)
                queue.append(n)
    if len(seen) != len(triangles):
        missing = min(i for i in range(len(triangles)) if i not in seen)
        raise Disconnected(triangles[missing])

    boundary_edges = frozenset(e for e, ts in edge_tris.items() if len(ts) == 1)
    return ValidatedSurface(
        triangulation=tri,
        edges=frozenset(edge_tris),
        boundary_edges=boundary_edges,
        boundaries=_boundary_cycles(boundary_edges),
    )


def _is_orientable(triangles, edge_tris) -> bool:
    # sign[i] = +1 keeps the stored orientation of triangle i, -1 reverses it.
    # Across an interior edge the two induced directions must be opposite.
    def direction(tri, e):
        a, b, c = tri
        for x, y in ((a, b), (b, c), (c, a)):
            if (x, y) == e:
                return 1
            if (y, x) == e:
                return -1
        raise AssertionError

    sign = {0: 1}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        a, b, c = triangles[i]
        for e in (_edge(a, b), _edge(b, c), _edge(a, c)):
            for j in edge_tris[e]:
                if j == i:
                    continue
                want = -sign[i] * direction(triangles[i], e) * direction(triangles[j], e)
                if j not in sign:
                    sign[j] = want
                    queue.append(j)
                elif sign[j] != want:
                    return False
    return True


def signature(surf: ValidatedSurface) -> SurfaceSignature:
    triangles = surf.triangulation.triangles
    v = len(surf.triangulation.vertices)
    e = len(surf.edges)
    f = len(triangles)
    chi = v - e + f
    b = len(surf.boundaries)
    if _is_orientable(triangles, _edge_map(triangles)):
        return SurfaceSignature(True, (2 - b - chi) // 2, 0, b, chi)
    return SurfaceSignature(False, 0, 2 - b - chi, b, chi)


def triangulation_signature(tri: Triangulation) -> SurfaceSignature:
    return signature(validate_triangulation(tri))


def is_planar(sig: SurfaceSignature) -> bool:
    return sig.orientable and sig.genus == 0
