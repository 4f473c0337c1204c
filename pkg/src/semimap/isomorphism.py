"""Isomorphism of maps via canonical flag encodings, plus exact characteristic polynomials.

A flag is a (vertex, edge, face) triple with all three mutually incident. Each
face of length p carries 2p flags. Three involutions act on them:

* ``s0`` keeps edge and face, moves to the other end of the edge;
* ``s1`` keeps vertex and face, moves to the other edge of the face at that vertex;
* ``s2`` keeps vertex and edge, moves to the other face on that edge.

Numbering flags in breadth-first order from a root (trying s0, s1, s2 in turn)
and listing the numbers of the images gives a code that determines the map up
to isomorphism. The least code over all roots is the certificate. Roots that
attain it are in bijection with automorphisms, orientation-reversing ones
included, because every flag is tried as a root.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _flagkernel as K
from .facetypes import map_type
from .map_core import Map, classify_surface

__all__ = [
    "FlagSystem",
    "CanonicalCertificate",
    "CharPoly",
    "flag_system",
    "canonical_form",
    "certificate_hash",
    "automorphism_count",
    "is_isomorphic",
    "isomorphism_witness",
    "cycle_notation",
    "char_poly",
    "adjacency_matrix",
]


@dataclass(frozen=True)
class FlagSystem:
    """Flags indexed 0..n-1; ``vertex[i]`` is the vertex of flag i."""

    s0: np.ndarray
    s1: np.ndarray
    s2: np.ndarray
    vertex: np.ndarray

    def __len__(self) -> int:
        return len(self.s0)


def flag_system(m: Map) -> FlagSystem:
    # flag 2*(offset+i) runs from face[i] towards face[i+1]; the odd partner towards face[i-1]
    offsets = []
    total = 0
    for f in m.faces:
        offsets.append(total)
        total += len(f)
    n = 2 * total
    s0 = np.empty(n, dtype=np.int64)
    s1 = np.empty(n, dtype=np.int64)
    s2 = np.empty(n, dtype=np.int64)
    vertex = np.empty(n, dtype=np.int64)

    def fwd(fi: int, i: int) -> int:
        return 2 * (offsets[fi] + i % len(m.faces[fi]))

    def bwd(fi: int, i: int) -> int:
        return 2 * (offsets[fi] + i % len(m.faces[fi])) + 1

    directed: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for fi, f in enumerate(m.faces):
        p = len(f)
        for i in range(p):
            a, b = fwd(fi, i), bwd(fi, i)
            vertex[a] = vertex[b] = f[i]
            s1[a], s1[b] = b, a
            s0[a] = bwd(fi, i + 1)
            s0[b] = fwd(fi, i - 1)
            directed.setdefault((f[i], f[(i + 1) % p]), []).append((fi, a))
            directed.setdefault((f[i], f[i - 1]), []).append((fi, b))
    for key, items in directed.items():
        # the same vertex-edge pair seen from its two faces
        if len(items) != 2:
            raise ValueError(f"edge {key} is not shared by exactly two faces")
        (fa, x), (fb, y) = items
        s2[x], s2[y] = y, x
    if not (np.all(s0[s0] == np.arange(n)) and np.all(s1[s1] == np.arange(n)) and np.all(s2[s2] == np.arange(n))):
        raise AssertionError("flag maps are not involutions")
    assert n == 2 * sum(len(f) for f in m.faces) == 4 * m.n_edges
    return FlagSystem(s0, s1, s2, vertex)


@dataclass(frozen=True, order=True)
class CanonicalCertificate:
    data: bytes

    def hexdigest(self, length: int = 16) -> str:
        return hashlib.sha256(self.data).hexdigest()[:length]


@dataclass(frozen=True)
class _Canon:
    certificate: CanonicalCertificate
    n_roots: int
    root: int


def _encode(n_vertices: int, code: Sequence[int], n_flags: int) -> bytes:
    header = n_vertices.to_bytes(4, "big") + n_flags.to_bytes(4, "big")
    body = np.asarray(code, dtype=">u2").tobytes()
    return header + body


@lru_cache(maxsize=4096)
def _canon(m: Map) -> _Canon:
    fs = flag_system(m)
    n = len(fs)
    if n >= 1 << 16:
        raise ValueError("map too large for 16-bit certificate entries")
    best, label, order, code = K.buffers(n)
    n_best, root = K.minimal_code(K.as_backend(fs.s0), K.as_backend(fs.s1), K.as_backend(fs.s2), best, label, order, code)
    return _Canon(CanonicalCertificate(_encode(m.n_vertices, best, n)), int(n_best), int(root))


def canonical_form(m: Map) -> CanonicalCertificate:
    return _canon(m).certificate


def certificate_hash(m: Map, length: int = 16) -> str:
    return canonical_form(m).hexdigest(length)


def automorphism_count(m: Map) -> int:
    return _canon(m).n_roots


def _vertex_order(m: Map) -> tuple[np.ndarray, FlagSystem]:
    fs = flag_system(m)
    _, label, order, _ = K.buffers(len(fs))
    K.bfs_order(K.as_backend(fs.s0), K.as_backend(fs.s1), K.as_backend(fs.s2), _canon(m).root, label, order)
    return np.asarray(order, dtype=np.int64), fs


def isomorphism_witness(m1: Map, m2: Map) -> tuple[int, ...] | None:
    """Vertex bijection ``w`` with ``w[v]`` in ``m2`` for ``v`` in ``m1``, or None."""
    if canonical_form(m1) != canonical_form(m2):
        return None
    o1, f1 = _vertex_order(m1)
    o2, f2 = _vertex_order(m2)
    w = [-1] * m1.n_vertices
    for a, b in zip(f1.vertex[o1], f2.vertex[o2]):
        if w[a] < 0:
            w[a] = int(b)
        elif w[a] != b:
            raise AssertionError("flag correspondence does not respect vertices")
    return tuple(w)


def cycle_notation(perm: Sequence[int]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        parts.append("(" + ",".join(str(c) for c in cyc) + ")")
    return "".join(parts) or "()"


# ---------------------------------------------------------------------------
# characteristic polynomial


@dataclass(frozen=True)
class CharPoly:
    """Coefficients of det(aI - A), highest degree first."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        n = self.degree
        out = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            k = n - i
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "a" if k == 1 else f"a^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out) or "0"


def adjacency_matrix(m: Map) -> list[list[int]]:
    a = [[0] * m.n_vertices for _ in range(m.n_vertices)]
    for x, y in m.edges:
        a[x][y] = a[y][x] = 1
    return a


def _faddeev_leverrier(a: list[list[int]]) -> tuple[int, ...]:
    n = len(a)
    coeffs = [1]
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        # M_k = A M_{k-1} + c_{k-1} I
        prod = [[sum(a[i][t] * mk[t][j] for t in range(n) if a[i][t]) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += c_prev
        mk = prod
        tr = sum(a[i][t] * mk[t][i] for i in range(n) for t in range(n) if a[i][t])
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("inexact division in characteristic polynomial")
        coeffs.append(q)
    return tuple(coeffs)


@lru_cache(maxsize=4096)
def char_poly(m: Map) -> CharPoly:
    return CharPoly(_faddeev_leverrier(adjacency_matrix(m)))


def is_isomorphic(m1: Map, m2: Map) -> bool:
    if (m1.n_vertices, m1.n_edges, m1.n_faces) != (m2.n_vertices, m2.n_edges, m2.n_faces):
        return False
    if sorted(len(f) for f in m1.faces) != sorted(len(f) for f in m2.faces):
        return False
    if map_type(m1) != map_type(m2) or classify_surface(m1) != classify_surface(m2):
        return False
    if char_poly(m1) != char_poly(m2):
        return False
    return canonical_form(m1) == canonical_form(m2)
