"""Builders for the standard Dynkin / extended Dynkin diagrams.

Vertices are named "1", "2", ... and each diagram comes as an edge list in a
default orientation; ``orientations`` flips edge subsets to walk through all
2^edges orientations of a diagram.
"""

from __future__ import annotations

from typing import Iterator

from .errors import DomainError
from .quiver import Quiver, make_quiver

Edge = tuple[str, str]


def _path(n: int) -> list[Edge]:
    return [(str(i), str(i + 1)) for i in range(1, n)]


def dynkin_edges(family: str, n: int) -> list[Edge]:
    if family == "A":
        if n < 1:
            raise DomainError("A_n needs n >= 1")
        return _path(n)
    if family == "D":
        if n < 4:
            raise DomainError("D_n needs n >= 4")
        # two leaves into vertex 3, then a path 3..n
        return [("1", "3"), ("2", "3")] + [(str(i), str(i + 1)) for i in range(3, n)]
    if family == "E":
        if n not in (6, 7, 8):
            raise DomainError("E_n needs n in {6, 7, 8}")
        return _path(n - 1) + [(str(n), "3")]
    raise DomainError(f"unknown Dynkin family: {family}")


def euclidean_edges(family: str, n: int) -> list[Edge]:
    if family == "A":
        if n < 1:
            raise DomainError("A~_n needs n >= 1")
        if n == 1:
            return [("1", "2"), ("1", "2")]
        # closing edge oriented 1 -> n+1 so the default orientation is acyclic
        return _path(n + 1) + [("1", str(n + 1))]
    if family == "D":
        if n < 4:
            raise DomainError("D~_n needs n >= 4")
        # leaves 1,2 at vertex 3; path 3..n-1; leaves n, n+1 at vertex n-1
        core = [("1", "3"), ("2", "3")] + [(str(i), str(i + 1)) for i in range(3, n - 1)]
        return core + [(str(n - 1), str(n)), (str(n - 1), str(n + 1))]
    if family == "E":
        if n == 6:
            return _path(5) + [("3", "6"), ("6", "7")]
        if n == 7:
            return _path(7) + [("8", "4")]
        if n == 8:
            return _path(8) + [("9", "3")]
        raise DomainError("E~_n needs n in {6, 7, 8}")
    raise DomainError(f"unknown Euclidean family: {family}")


def quiver_from_edges(edges: list[Edge], flip_mask: int = 0,
                      vertices: list[str] | None = None) -> Quiver:
    if vertices is None:
        verts: list[str] = []
        for s, t in edges:
            for v in (s, t):
                if v not in verts:
                    verts.append(v)
        vertices = sorted(verts, key=lambda v: (len(v), v))
        if not vertices:
            vertices = ["1"]
    arrows = []
    for k, (s, t) in enumerate(edges):
        arrows.append((t, s) if (flip_mask >> k) & 1 else (s, t))
    return make_quiver(vertices, arrows)


def orientations(edges: list[Edge]) -> Iterator[Quiver]:
    """All 2^edges orientations of an edge list (cyclic ones included)."""
    for mask in range(1 << len(edges)):
        yield quiver_from_edges(edges, mask)


def kronecker_quiver(l: int) -> Quiver:
    """K(l): two vertices joined by l parallel arrows 1 -> 2."""
    if l < 1:
        raise DomainError("K(l) needs l >= 1")
    return make_quiver(["1", "2"], [("1", "2")] * l)


def dynkin_diagrams(max_vertices: int) -> list[tuple[str, list[Edge]]]:
    out = []
    for n in range(1, max_vertices + 1):
        out.append((f"A_{n}", dynkin_edges("A", n)))
    for n in range(4, max_vertices + 1):
        out.append((f"D_{n}", dynkin_edges("D", n)))
    for n in (6, 7, 8):
        if n <= max_vertices:
            out.append((f"E_{n}", dynkin_edges("E", n)))
    return out


def euclidean_diagrams(max_vertices: int) -> list[tuple[str, list[Edge]]]:
    out = []
    for n in range(1, max_vertices):
        if n + 1 <= max_vertices:
            out.append((f"A~_{n}", euclidean_edges("A", n)))
    for n in range(4, max_vertices):
        if n + 1 <= max_vertices:
            out.append((f"D~_{n}", euclidean_edges("D", n)))
    for n in (6, 7, 8):
        if n + 1 <= max_vertices:
            out.append((f"E~_{n}", euclidean_edges("E", n)))
    return out
