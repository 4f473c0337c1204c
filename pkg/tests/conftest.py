from __future__ import annotations

import os
import sys
from itertools import permutations

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import random  # noqa: E402

from semimap.map_core import Map, build_map, relabel, stack_face  # noqa: E402


def seven_vertex_torus() -> Map:
    faces = []
    for i in range(7):
        faces.append((i, (i + 1) % 7, (i + 3) % 7))
        faces.append((i, (i + 2) % 7, (i + 3) % 7))
    return build_map(7, faces)


def square_torus(k: int = 3) -> Map:
    faces = []
    for i in range(k):
        for j in range(k):
            faces.append((k * i + j, k * i + (j + 1) % k, k * ((i + 1) % k) + (j + 1) % k, k * ((i + 1) % k) + j))
    return build_map(k * k, faces)


def tetrahedron() -> Map:
    return build_map(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


def octahedron() -> Map:
    ring = [1, 2, 3, 4]
    faces = []
    for i in range(4):
        a, b = ring[i], ring[(i + 1) % 4]
        faces += [(0, a, b), (5, a, b)]
    return build_map(6, faces)


def cube() -> Map:
    return build_map(8, [
        (0, 1, 2, 3), (4, 5, 6, 7), (0, 1, 5, 4), (1, 2, 6, 5), (2, 3, 7, 6), (3, 0, 4, 7),
    ])


def prism() -> Map:
    return build_map(6, [(0, 1, 2), (3, 4, 5), (0, 1, 4, 3), (1, 2, 5, 4), (2, 0, 3, 5)])


def square_pyramid() -> Map:
    return build_map(5, [(0, 1, 2, 3), (4, 0, 1), (4, 1, 2), (4, 2, 3), (4, 3, 0)])


SMALL_MAPS = {
    "tetrahedron": tetrahedron,
    "octahedron": octahedron,
    "cube": cube,
    "prism": prism,
    "square_pyramid": square_pyramid,
    "seven_vertex_torus": seven_vertex_torus,
}


def shuffled(m: Map, seed: int) -> Map:
    perm = list(range(m.n_vertices))
    random.Random(seed).shuffle(perm)
    return relabel(m, perm)


def small_pool() -> dict[str, Map]:
    """Maps on at most 8 vertices, including pairs with equal counts that differ."""
    pool = {k: f() for k, f in SMALL_MAPS.items()}
    pool["prism+tri"] = stack_face(prism(), 0)
    pool["prism+quad"] = stack_face(prism(), 2)
    pool["pyramid+tri"] = stack_face(square_pyramid(), 1)
    pool["pyramid+quad"] = stack_face(square_pyramid(), 0)
    pool["tetra+1"] = stack_face(tetrahedron(), 0)
    pool["tetra+2a"] = stack_face(stack_face(tetrahedron(), 0), 0)
    pool["tetra+2b"] = stack_face(stack_face(tetrahedron(), 0), 5)
    for i, k in enumerate(sorted(pool)):
        pool[k + "~"] = shuffled(pool[k], i)
    return {k: m for k, m in pool.items() if m.n_vertices <= 8}


def face_key(face) -> frozenset:
    """A face as the set of its undirected edges, independent of start and direction."""
    n = len(face)
    return frozenset(frozenset((face[i], face[(i + 1) % n])) for i in range(n))


def brute_force_isomorphisms(m1: Map, m2: Map):
    """Every vertex bijection carrying the faces of m1 onto those of m2."""
    if m1.n_vertices != m2.n_vertices or m1.n_faces != m2.n_faces:
        return
    target = {face_key(f) for f in m2.faces}
    for perm in permutations(range(m2.n_vertices)):
        if all(face_key([perm[x] for x in f]) in target for f in m1.faces):
            yield perm


@pytest.fixture
def t7() -> Map:
    return seven_vertex_torus()


@pytest.fixture
def grid() -> Map:
    return square_torus(3)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
