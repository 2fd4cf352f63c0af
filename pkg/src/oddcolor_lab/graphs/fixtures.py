"""Named connected plane graphs with hand-checked face lists."""

from __future__ import annotations

from collections.abc import Callable

from ..exceptions import InvalidParameterError
from .core import from_edges
from .plane import PlaneGraph, Walk, walk_edges


def _from_faces(n: int, faces: list[Walk]) -> PlaneGraph:
    edges = sorted({e for walk in faces for e in walk_edges(walk)})
    return PlaneGraph(graph=from_edges(n, edges), faces=tuple(faces))


def plane_cycle(n: int) -> PlaneGraph:
    walk = tuple(range(n))
    return _from_faces(n, [walk, tuple(reversed(walk))])


def plane_prism(k: int) -> PlaneGraph:
    """Outer k-cycle ``0..k-1``, inner k-cycle ``k..2k-1``, spokes ``i -- i+k``."""
    outer = tuple(range(k))
    inner = tuple(range(2 * k - 1, k - 1, -1))
    quads = [(i, (i + 1) % k, (i + 1) % k + k, i + k) for i in range(k)]
    return _from_faces(2 * k, [outer, inner, *quads])


def plane_tetrahedron() -> PlaneGraph:
    return _from_faces(4, [(0, 1, 2), (0, 3, 1), (0, 2, 3), (1, 3, 2)])


def plane_dodecahedron() -> PlaneGraph:
    """Outer pentagon 0-4, middle 10-cycle 5-14, inner pentagon 15-19."""

    def m(j: int) -> int:
        return 5 + j % 10

    faces: list[Walk] = [tuple(range(5)), tuple(range(15, 20))]
    for i in range(5):
        faces.append((i, (i + 1) % 5, m(2 * i + 2), m(2 * i + 1), m(2 * i)))
        faces.append((m(2 * i + 1), m(2 * i + 2), m(2 * i + 3), 15 + (i + 1) % 5, 15 + i))
    return _from_faces(20, faces)


def plane_star(leaves: int) -> PlaneGraph:
    walk: list[int] = []
    for leaf in range(1, leaves + 1):
        walk.extend([0, leaf])
    return _from_faces(leaves + 1, [tuple(walk)])


def plane_path(n: int) -> PlaneGraph:
    forward = list(range(n))
    return _from_faces(n, [tuple(forward + forward[-2:0:-1])])


def plane_two_pentagons() -> PlaneGraph:
    """Two 5-faces sharing the edge 0-4."""
    return _from_faces(
        8, [(0, 1, 2, 3, 4), (0, 4, 5, 6, 7), (0, 7, 6, 5, 4, 3, 2, 1)]
    )


def plane_triangle_pendant() -> PlaneGraph:
    return _from_faces(4, [(0, 1, 2), (0, 3, 0, 2, 1)])


def subdivide_plane(plane: PlaneGraph) -> PlaneGraph:
    """Subdivide every edge once; new vertices follow the old ones in edge order."""
    base = plane.graph
    middle = {edge: base.n + i for i, edge in enumerate(base.edges())}
    faces = []
    for walk in plane.faces:
        k = len(walk)
        new_walk: list[int] = []
        for i, v in enumerate(walk):
            w = walk[(i + 1) % k]
            new_walk.extend([v, middle[(v, w) if v < w else (w, v)]])
        faces.append(tuple(new_walk))
    return _from_faces(base.n + base.m, faces)


PLANE_FIXTURES: dict[str, Callable[[], PlaneGraph]] = {
    "c5": lambda: plane_cycle(5),
    "c8": lambda: plane_cycle(8),
    "cube": lambda: plane_prism(4),
    "dodecahedron": plane_dodecahedron,
    "tetrahedron": plane_tetrahedron,
    "triangular-prism": lambda: plane_prism(3),
    "pentagonal-prism": lambda: plane_prism(5),
    "p3": lambda: plane_path(3),
    "star3": lambda: plane_star(3),
    "two-pentagons": plane_two_pentagons,
    "sk4": lambda: subdivide_plane(plane_tetrahedron()),
    "triangle-pendant": plane_triangle_pendant,
}


def plane_fixture(name: str) -> PlaneGraph:
    try:
        return PLANE_FIXTURES[name]()
    except KeyError:
        raise InvalidParameterError(
            "plane_fixture", f"unknown fixture {name!r}; known: {', '.join(PLANE_FIXTURES)}"
        ) from None
