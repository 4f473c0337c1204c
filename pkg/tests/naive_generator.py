"""Slow reference generator used only as a completeness oracle in tests.

Grows a face set from one triangle by closing a boundary edge with every
possible polygon over labels already in use plus fresh ones. Steps are
rejected only by direct consequences of the map axioms: an edge lies on at most
two faces, two faces meet in at most an edge, the faces at a vertex form paths
or one closed cycle whose sizes read an allowed face-sequence, and an open
vertex cannot already carry more faces than any allowed sequence has room for.
Complete face sets are validated from scratch.
"""

from __future__ import annotations

from itertools import permutations

from semimap.facetypes import canonical_cyclic, map_type, parse_type
from semimap.isomorphism import canonical_form
from semimap.map_core import MapError, build_map


def _corner_state(faces, x):
    """None if inconsistent, ('open', paths, sizes), or the cyclic size tuple when closed."""
    corners = []
    for f in faces:
        if x in f:
            i = f.index(x)
            corners.append((f[i - 1], f[(i + 1) % len(f)], len(f)))
    deg: dict[int, int] = {}
    for a, b, _ in corners:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    if any(d > 2 for d in deg.values()):
        return None
    if any(d == 1 for d in deg.values()):
        # a forest of paths has one more vertex than edges per component
        n_paths = sum(1 for d in deg.values() if d == 1) // 2
        if len(deg) - len(corners) != n_paths:
            return None
        return ("open", n_paths, sorted(c[2] for c in corners))
    seq = []
    a, b, p = corners[0]
    used = {0}
    seq.append(p)
    cur = b
    while cur != a:
        nxt = [i for i, c in enumerate(corners) if i not in used and cur in c[:2]]
        if not nxt:
            return None
        i = nxt[0]
        used.add(i)
        c = corners[i]
        seq.append(c[2])
        cur = c[1] if c[0] == cur else c[0]
    if len(used) != len(corners):
        return None
    return tuple(seq)


def _submultiset(small, big) -> bool:
    rest = list(big)
    for x in small:
        if x not in rest:
            return False
        rest.remove(x)
    return True


def naive_maps(type_text: str, n_max: int) -> dict:
    target = parse_type(type_text)
    allowed = {s.sizes for s in target.sequences}
    sizes = sorted({p for s in allowed for p in s})
    max_deg = max(len(s) for s in allowed)
    found = {}
    faces: list[tuple[int, ...]] = [(0, 1, 2)]
    edges = {(0, 1): 1, (1, 2): 1, (0, 2): 1}
    labels = [3]

    def key(a, b):
        return (a, b) if a < b else (b, a)

    def edge_set(f):
        return {key(f[i], f[(i + 1) % len(f)]) for i in range(len(f))}

    def legal(face):
        fs = set(face)
        mine = edge_set(face)
        for g in faces:
            shared = fs & set(g)
            if len(shared) > 2:
                return False
            if len(shared) == 2:
                e = key(*shared)
                if e not in mine or e not in edge_set(g):
                    return False
        return True

    def vertex_ok(x) -> bool:
        st = _corner_state(faces, x)
        if st is None:
            return False
        if st[0] == "open":
            _, n_paths, present = st
            # every open path needs at least one more face before the wheel closes
            return len(present) + n_paths <= max_deg and any(_submultiset(present, s) for s in allowed)
        return canonical_cyclic(st) in allowed

    def rec():
        boundary = [e for e, c in edges.items() if c == 1]
        if not boundary:
            try:
                m = build_map(labels[0], faces)
            except MapError:
                return
            if map_type(m) == target:
                found.setdefault(canonical_form(m).data, m)
            return
        load: dict[int, int] = {}
        for f in faces:
            for x in f:
                load[x] = load.get(x, 0) + 1
        # close an edge at the most crowded vertex first
        a, b = min(boundary, key=lambda e: (-max(load[e[0]], load[e[1]]), e))
        n = labels[0]
        pool = [x for x in range(n) if x not in (a, b)] + list(range(n, min(n_max, n + max(sizes) - 2)))
        for p in sizes:
            for rest in permutations(pool, p - 2):
                fresh = [x for x in rest if x >= n]
                # fresh labels appear in increasing order
                if fresh != list(range(n, n + len(fresh))):
                    continue
                face = (a, b) + rest
                es = [key(face[i], face[(i + 1) % p]) for i in range(p)]
                if any(edges.get(e, 0) >= 2 for e in es) or not legal(face):
                    continue
                faces.append(face)
                for e in es:
                    edges[e] = edges.get(e, 0) + 1
                labels[0] = n + len(fresh)
                if all(vertex_ok(x) for x in face):
                    rec()
                labels[0] = n
                for e in es:
                    edges[e] -= 1
                    if not edges[e]:
                        del edges[e]
                faces.pop()

    rec()
    return found
