"""Polygonal maps on closed surfaces.

A :class:`Map` is a vertex count plus a list of faces, each face a cyclic
sequence of distinct vertex ids. :func:`build_map` checks that the faces glue
into a closed surface in which two faces meet in nothing, one vertex or one
edge, and stores them in normal form (least vertex first, then its smaller
neighbour) sorted lexicographically.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .facetypes import FaceSequence

Rational = Fraction

__all__ = [
    "Map",
    "Face",
    "LinkCycle",
    "Surface",
    "SurfaceKind",
    "Rational",
    "MapError",
    "FaceTooSmall",
    "RepeatedVertexInFace",
    "VertexOutOfRange",
    "EdgeNotOnTwoFaces",
    "FaceIntersectionViolation",
    "PinchedVertex",
    "Disconnected",
    "DanglingVertex",
    "MapFormatError",
    "build_map",
    "normalize_face",
    "link",
    "face_sequence",
    "curvature",
    "euler_characteristic",
    "orientable",
    "classify_surface",
    "stack_face",
    "stack_all_faces",
    "relabel",
    "parse_map_text",
    "format_map_text",
    "read_map",
    "write_map",
]

Face = tuple[int, ...]


# ---------------------------------------------------------------------------
# errors


class MapError(ValueError):
    """Base class for every way a face list can fail to be a map."""


class FaceTooSmall(MapError):
    pass


class RepeatedVertexInFace(MapError):
    pass


class VertexOutOfRange(MapError):
    pass


class EdgeNotOnTwoFaces(MapError):
    def __init__(self, edge: tuple[int, int], count: int):
        super().__init__(f"edge {edge[0]}-{edge[1]} lies on {count} face(s), expected 2")
        self.edge = edge
        self.count = count


class FaceIntersectionViolation(MapError):
    def __init__(self, face_a: Face, face_b: Face, shared: frozenset[int]):
        super().__init__(
            f"faces {face_a} and {face_b} share {sorted(shared)}, "
            "which is neither a single vertex nor an edge"
        )
        self.faces = (face_a, face_b)
        self.shared = shared


class PinchedVertex(MapError):
    pass


class Disconnected(MapError):
    pass


class DanglingVertex(MapError):
    pass


class MapFormatError(ValueError):
    """Malformed map text."""


# ---------------------------------------------------------------------------
# construction


def normalize_face(face: Sequence[int]) -> Face:
    f = tuple(int(x) for x in face)
    i = f.index(min(f))
    f = f[i:] + f[:i]
    if len(f) > 2 and f[-1] < f[1]:
        f = (f[0],) + f[:0:-1]
    return f


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _face_edges(face: Face) -> Iterable[tuple[int, int]]:
    n = len(face)
    for i in range(n):
        yield _edge(face[i], face[(i + 1) % n])


def _shared_is_legal(fa: Face, fb: Face, shared: set[int]) -> bool:
    if len(shared) <= 1:
        return True
    if len(shared) > 2:
        return False
    a, b = shared
    # the two shared vertices must be an edge of both faces
    for f in (fa, fb):
        n = len(f)
        if (f.index(a) - f.index(b)) % n not in (1, n - 1):
            return False
    return True


def _neighbours_in_face(face: Face, v: int) -> tuple[int, int]:
    i = face.index(v)
    return face[i - 1], face[(i + 1) % len(face)]


def build_map(n_vertices: int, faces: Iterable[Sequence[int]]) -> "Map":
    n_vertices = int(n_vertices)
    if n_vertices < 1:
        raise MapError("a map needs at least one vertex")
    raw = [tuple(int(x) for x in f) for f in faces]
    for f in raw:
        if len(f) < 3:
            raise FaceTooSmall(f"face {f} has {len(f)} vertices, need at least 3")
        if len(set(f)) != len(f):
            raise RepeatedVertexInFace(f"face {f} repeats a vertex")
        for x in f:
            if not 0 <= x < n_vertices:
                raise VertexOutOfRange(f"vertex {x} in face {f} is outside 0..{n_vertices - 1}")
    norm = sorted(normalize_face(f) for f in raw)

    edge_count: dict[tuple[int, int], int] = {}
    for f in norm:
        for e in _face_edges(f):
            edge_count[e] = edge_count.get(e, 0) + 1
    for e, c in sorted(edge_count.items()):
        if c > 2:
            raise EdgeNotOnTwoFaces(e, c)

    at_vertex: list[list[int]] = [[] for _ in range(n_vertices)]
    for idx, f in enumerate(norm):
        for x in f:
            at_vertex[x].append(idx)

    checked: set[tuple[int, int]] = set()
    for fids in at_vertex:
        for i, a in enumerate(fids):
            for b in fids[i + 1:]:
                if (a, b) in checked:
                    continue
                checked.add((a, b))
                shared = set(norm[a]) & set(norm[b])
                if not _shared_is_legal(norm[a], norm[b], shared):
                    raise FaceIntersectionViolation(norm[a], norm[b], frozenset(shared))

    for e, c in sorted(edge_count.items()):
        if c != 2:
            raise EdgeNotOnTwoFaces(e, c)

    for v, fids in enumerate(at_vertex):
        if len(fids) < 3:
            raise DanglingVertex(f"vertex {v} lies on {len(fids)} face(s), need at least 3")

    for v, fids in enumerate(at_vertex):
        # each face at v joins its two v-neighbours; a disk needs one cycle
        adj: dict[int, list[int]] = {}
        for fi in fids:
            a, b = _neighbours_in_face(norm[fi], v)
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        start = next(iter(adj))
        seen = {start}
        stack = [start]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(adj):
            raise PinchedVertex(f"faces around vertex {v} form more than one cycle")

    graph: list[set[int]] = [set() for _ in range(n_vertices)]
    for a, b in edge_count:
        graph[a].add(b)
        graph[b].add(a)
    seen = {0}
    queue = deque([0])
    while queue:
        for y in graph[queue.popleft()]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != n_vertices:
        raise Disconnected(f"only {len(seen)} of {n_vertices} vertices are reachable from 0")

    return Map(n_vertices, tuple(norm))


class LinkEntry(NamedTuple):
    vertex: int
    adjacent: bool


@dataclass(frozen=True)
class LinkCycle:
    center: int
    entries: tuple[LinkEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(e.vertex for e in self.entries)

    @property
    def adjacent(self) -> tuple[int, ...]:
        return tuple(e.vertex for e in self.entries if e.adjacent)

    def __str__(self) -> str:
        body = ",".join(str(e.vertex) if e.adjacent else f"*{e.vertex}" for e in self.entries)
        return f"C_{len(self.entries)}({body})"


class SurfaceKind(enum.Enum):
    TORUS = "torus"
    KLEIN_BOTTLE = "klein"
    OTHER = "other"


@dataclass(frozen=True)
class Surface:
    kind: SurfaceKind
    chi: int
    orientable: bool

    def __str__(self) -> str:
        if self.kind is SurfaceKind.TORUS:
            return "torus"
        if self.kind is SurfaceKind.KLEIN_BOTTLE:
            return "klein-bottle"
        return f"other(chi={self.chi},{'orientable' if self.orientable else 'non-orientable'})"


@dataclass(frozen=True)
class Map:
    """Validated map; build instances with :func:`build_map`."""

    n_vertices: int
    faces: tuple[Face, ...]

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(e for f in self.faces for e in _face_edges(f))

    @cached_property
    def vertex_face_incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n_vertices)]
        for fi, f in enumerate(self.faces):
            for pos, x in enumerate(f):
                inc[x].append((fi, pos))
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n_vertices)]
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return tuple(frozenset(s) for s in nb)

    def degree(self, v: int) -> int:
        return len(self.neighbours[v])

    @cached_property
    def _wheels(self) -> tuple[tuple[int, ...], ...]:
        # face indices around each vertex in cyclic order, started canonically
        out = []
        for v in range(self.n_vertices):
            out.append(_walk_wheel(self, v))
        return tuple(out)

    def wheel(self, v: int) -> tuple[int, ...]:
        return self._wheels[v]

    def link(self, v: int) -> LinkCycle:
        return link(self, v)

    def face_sequence(self, v: int) -> FaceSequence:
        return FaceSequence(tuple(len(self.faces[fi]) for fi in self._wheels[v]))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)


def _walk_wheel(m: Map, v: int) -> tuple[int, ...]:
    """Faces at ``v`` in wheel order, starting at the least neighbour."""
    by_nb: dict[int, list[tuple[int, int]]] = {}
    for fi, _ in m.vertex_face_incidence[v]:
        a, b = _neighbours_in_face(m.faces[fi], v)
        by_nb.setdefault(a, []).append((fi, b))
        by_nb.setdefault(b, []).append((fi, a))
    start = min(by_nb)
    best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    for first_face, _ in by_nb[start]:
        order = [first_face]
        cur_nb = start
        cur_face = first_face
        entries: list[int] = []
        while True:
            f = m.faces[cur_face]
            entries.extend(_link_segment(f, v, cur_nb))
            nxt = [(g, y) for g, y in by_nb[_far_neighbour(f, v, cur_nb)] if g != cur_face]
            cur_nb = _far_neighbour(f, v, cur_nb)
            cur_face = nxt[0][0]
            if cur_face == first_face:
                break
            order.append(cur_face)
        key = tuple(entries)
        if best is None or key < best[0]:
            best = (key, tuple(order))
    assert best is not None
    return best[1]


def _far_neighbour(face: Face, v: int, near: int) -> int:
    a, b = _neighbours_in_face(face, v)
    return b if near == a else a


def _link_segment(face: Face, v: int, start: int) -> list[int]:
    """Vertices of ``face`` other than ``v``, from ``start`` round to the other neighbour (exclusive)."""
    n = len(face)
    i = face.index(v)
    step = 1 if face[(i + 1) % n] == start else -1
    return [face[(i + step * k) % n] for k in range(1, n - 1)]


# ---------------------------------------------------------------------------
# derived quantities


def link(m: Map, v: int) -> LinkCycle:
    if not 0 <= v < m.n_vertices:
        raise IndexError(f"vertex {v} is outside 0..{m.n_vertices - 1}")
    nb = m.neighbours[v]
    entries: list[LinkEntry] = []
    wheel = m.wheel(v)
    prev = min(nb)
    for fi in wheel:
        f = m.faces[fi]
        seg = _link_segment(f, v, prev)
        for x in seg:
            entries.append(LinkEntry(x, x in nb))
        prev = _far_neighbour(f, v, prev)
    return LinkCycle(v, tuple(entries))


def face_sequence(m: Map, v: int) -> FaceSequence:
    return m.face_sequence(v)


def curvature(seq: FaceSequence) -> Fraction:
    return seq.curvature()


def euler_characteristic(m: Map) -> int:
    return m.n_vertices - m.n_edges + m.n_faces


def orientable(m: Map) -> bool:
    # sign[f] = +1 keeps the stored cyclic order, -1 reverses it
    edge_faces: dict[tuple[int, int], list[int]] = {}
    for fi, f in enumerate(m.faces):
        for e in _face_edges(f):
            edge_faces.setdefault(e, []).append(fi)

    def direction(fi: int, a: int, b: int) -> int:
        f = m.faces[fi]
        i = f.index(a)
        return 1 if f[(i + 1) % len(f)] == b else -1

    sign: dict[int, int] = {}
    for root in range(len(m.faces)):
        if root in sign:
            continue
        sign[root] = 1
        queue = deque([root])
        while queue:
            fi = queue.popleft()
            for e in _face_edges(m.faces[fi]):
                for gi in edge_faces[e]:
                    if gi == fi:
                        continue
                    # consistent orientations traverse a shared edge oppositely
                    want = -sign[fi] * direction(fi, *e) * direction(gi, *e)
                    if gi not in sign:
                        sign[gi] = want
                        queue.append(gi)
                    elif sign[gi] != want:
                        return False
    return True


def classify_surface(m: Map) -> Surface:
    chi = euler_characteristic(m)
    ori = orientable(m)
    if chi == 0:
        return Surface(SurfaceKind.TORUS if ori else SurfaceKind.KLEIN_BOTTLE, chi, ori)
    return Surface(SurfaceKind.OTHER, chi, ori)


# ---------------------------------------------------------------------------
# constructions


def _stack(m: Map, targets: Sequence[int]) -> Map:
    faces: list[Face] = []
    nxt = m.n_vertices
    chosen = set(targets)
    for fi, f in enumerate(m.faces):
        if fi not in chosen:
            faces.append(f)
            continue
        c = nxt
        nxt += 1
        n = len(f)
        faces.extend((f[i], f[(i + 1) % n], c) for i in range(n))
    return build_map(nxt, faces)


def stack_face(m: Map, face_index: int) -> Map:
    if not 0 <= face_index < m.n_faces:
        raise IndexError(f"face {face_index} is outside 0..{m.n_faces - 1}")
    return _stack(m, [face_index])


def stack_all_faces(m: Map) -> Map:
    return _stack(m, range(m.n_faces))


def relabel(m: Map, perm: Sequence[int]) -> Map:
    """Map with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(m.n_vertices)):
        raise ValueError("relabelling must be a permutation of the vertex ids")
    return build_map(m.n_vertices, [[perm[x] for x in f] for f in m.faces])


# ---------------------------------------------------------------------------
# text format


def format_map_text(m: Map, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"map {m.n_vertices}")
    lines.extend(" ".join(str(x) for x in f) for f in m.faces)
    return "\n".join(lines) + "\n"


def parse_map_text(text: str) -> Map:
    n: int | None = None
    faces: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "map":
                raise MapFormatError(f"line {lineno}: expected 'map <n_vertices>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise MapFormatError(f"line {lineno}: vertex count {parts[1]!r} is not an integer") from None
            continue
        try:
            faces.append([int(tok) for tok in line.split()])
        except ValueError:
            raise MapFormatError(f"line {lineno}: face entries must be integers") from None
    if n is None:
        raise MapFormatError("missing 'map <n_vertices>' header")
    return build_map(n, faces)


def read_map(path) -> Map:
    with open(path, encoding="utf-8") as fh:
        return parse_map_text(fh.read())


def write_map(m: Map, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_map_text(m, comment))
