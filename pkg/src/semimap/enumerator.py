"""Exhaustive generation of two-type curvature-0 maps, and a local non-existence prover.

Both operations grow a partial map one face at a time. Vertex 0 starts with a
full wheel of one of the two face-sequences. The search then repeatedly takes
the least-labelled vertex whose wheel is still open, picks its open edge
towards the least neighbour, and branches over every face that can sit on the
other side of that edge. A face's new corners are either existing open
vertices or the next unused label. A branch dies when

* two faces meet in anything other than nothing, a vertex or an edge,
* an edge would carry a third face,
* a closed wheel reads neither sequence, or
* the open fans around some vertex cannot be laid out as disjoint arcs of
  either sequence.

Finished maps are validated from scratch and deduplicated by certificate.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .facetypes import FaceSequence, MapType, canonical_cyclic, parse_type
from .isomorphism import canonical_form
from .map_core import Map, build_map

__all__ = [
    "SearchStatus",
    "SearchReport",
    "Verdict",
    "NonZeroCurvatureType",
    "NotAPairType",
    "enumerate_maps",
    "critical_vertex_obstruction",
    "DEFAULT_BUDGET",
    "DEFAULT_OBSTRUCTION_BUDGET",
]

DEFAULT_BUDGET = 10**8


class NonZeroCurvatureType(ValueError):
    pass


class NotAPairType(ValueError):
    pass


class SearchStatus(enum.Enum):
    COMPLETE = "complete"
    OBSTRUCTED = "obstructed"
    BUDGET_EXCEEDED = "budget-exceeded"


class Verdict(enum.Enum):
    OBSTRUCTED = "obstructed"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchReport:
    map_type: MapType
    n_max: int
    maps: tuple[Map, ...]
    nodes: int
    status: SearchStatus
    seed: FaceSequence = field(compare=False)


class _Budget(Exception):
    pass


_MISS = object()


def _check_pair(t: MapType | str) -> MapType:
    if isinstance(t, str):
        t = parse_type(t)
    if t.k != 2:
        raise NotAPairType(f"{t} has {t.k} face-sequence(s), expected 2")
    for s in t.sequences:
        if s.curvature() != 0:
            raise NonZeroCurvatureType(f"{s} has curvature {s.curvature()}")
    return t


# ---------------------------------------------------------------------------
# fan bookkeeping


def _fits_one(seq: tuple[int, ...], fans: tuple[tuple[int, ...], ...]) -> bool:
    d = len(seq)
    if sum(len(f) for f in fans) + len(fans) > d:
        return False
    occupied = [False] * d

    def place(i: int) -> bool:
        if i == len(fans):
            return True
        fan = fans[i]
        n = len(fan)
        for orient in {fan, fan[::-1]}:
            for p in range(d):
                if occupied[(p - 1) % d] or occupied[(p + n) % d]:
                    continue
                ok = True
                for k in range(n):
                    c = (p + k) % d
                    if occupied[c] or seq[c] != orient[k]:
                        ok = False
                        break
                if not ok:
                    continue
                for k in range(n):
                    occupied[(p + k) % d] = True
                if place(i + 1):
                    for k in range(n):
                        occupied[(p + k) % d] = False
                    return True
                for k in range(n):
                    occupied[(p + k) % d] = False
        return False

    return place(0)


class _Engine:
    """Mutable partial map with undo, shared by enumeration and obstruction search."""

    def __init__(self, t: MapType, seed: FaceSequence, n_max: int | None, budget: int):
        self.t = t
        self.allowed = {s.sizes for s in t.sequences}
        self.sizes = sorted({p for s in t.sequences for p in s.sizes})
        self.n_max = n_max
        self.budget = budget
        self.nodes = 0
        self.fit_cache: dict[tuple, bool] = {}
        self.faces: list[tuple[int, ...]] = []
        self.edge_cnt: dict[tuple[int, int], int] = {}
        self.vfaces: list[list[int]] = []
        self.corners: list[list[tuple[int, int, int]]] = []
        self.closed: list[tuple[int, ...] | None] = []
        self.n_labels = 0
        self._undo_closed: list[list] = []
        self.forced: dict[int, tuple[int, ...]] = {}
        self._an_cache: dict[int, object] = {}
        self._seed(seed)

    # -- structure -----------------------------------------------------------------

    def _new_label(self) -> int:
        self.vfaces.append([])
        self.corners.append([])
        self.closed.append(None)
        self.n_labels += 1
        return self.n_labels - 1

    def _seed(self, seed: FaceSequence) -> None:
        self._new_label()
        total = seed.link_length
        for _ in range(total):
            self._new_label()
        label = 1
        for j, p in enumerate(seed.sizes):
            face = [0]
            for _ in range(p - 1):
                face.append(label)
                label += 1
            label -= 1
            if j == len(seed.sizes) - 1:
                face[-1] = 1
            self._add_face(tuple(face))
        self.closed[0] = seed.sizes

    def _add_face(self, face: tuple[int, ...]) -> None:
        fi = len(self.faces)
        self.faces.append(face)
        p = len(face)
        for i in range(p):
            a, b = face[i], face[(i + 1) % p]
            e = (a, b) if a < b else (b, a)
            self.edge_cnt[e] = self.edge_cnt.get(e, 0) + 1
            x = face[i]
            self._an_cache.pop(x, None)
            self.vfaces[x].append(fi)
            self.corners[x].append((face[i - 1], face[(i + 1) % p], p))

    def _remove_last_face(self) -> None:
        face = self.faces.pop()
        p = len(face)
        for i in range(p):
            a, b = face[i], face[(i + 1) % p]
            e = (a, b) if a < b else (b, a)
            c = self.edge_cnt[e] - 1
            if c:
                self.edge_cnt[e] = c
            else:
                del self.edge_cnt[e]
            x = face[i]
            self._an_cache.pop(x, None)
            self.vfaces[x].pop()
            self.corners[x].pop()

    # -- local analysis ------------------------------------------------------------

    def _analyze(self, v: int):
        """('closed', seq) | ('open', fans, ends) | None when the corners are inconsistent."""
        hit = self._an_cache.get(v, _MISS)
        if hit is _MISS:
            hit = self._an_cache[v] = self._analyze_uncached(v)
        return hit

    def _analyze_uncached(self, v: int):
        cs = self.corners[v]
        adj: dict[int, list[int]] = {}
        for idx, (a, b, _) in enumerate(cs):
            adj.setdefault(a, []).append(idx)
            adj.setdefault(b, []).append(idx)
        for lst in adj.values():
            if len(lst) > 2:
                return None
        used = [False] * len(cs)
        fans = []
        ends = []
        for u, lst in adj.items():
            if len(lst) != 1 or used[lst[0]]:
                continue
            seq = []
            cur, ci = u, lst[0]
            while True:
                used[ci] = True
                a, b, p = cs[ci]
                seq.append(p)
                nxt = b if a == cur else a
                l2 = adj[nxt]
                if len(l2) == 1:
                    break
                ci = l2[0] if l2[1] == ci else l2[1]
                cur = nxt
            fans.append(tuple(seq))
            ends.append((u, nxt))
        if all(used):
            return ("open", fans, ends)
        if fans:
            return None
        seq = []
        a, b, p = cs[0]
        cur, ci = b, 0
        seen = 0
        while True:
            seen += 1
            seq.append(cs[ci][2])
            l2 = adj[cur]
            ci = l2[0] if l2[1] == ci else l2[1]
            if ci == 0:
                break
            a, b, _ = cs[ci]
            cur = b if a == cur else a
        if seen != len(cs):
            return None
        return ("closed", tuple(seq))

    def _fits(self, fans) -> bool:
        key = tuple(sorted(min(f, f[::-1]) for f in fans))
        hit = self.fit_cache.get(key)
        if hit is None:
            hit = any(_fits_one(s, key) for s in self.allowed)
            self.fit_cache[key] = hit
        return hit

    def _vertex_ok(self, v: int) -> bool:
        res = self._analyze(v)
        if res is None:
            return False
        if res[0] == "closed":
            seq = canonical_cyclic(res[1])
            if seq not in self.allowed or self.forced.get(v, seq) != seq:
                return False
            self.closed[v] = seq
            return True
        self.closed[v] = None
        target = self.forced.get(v)
        if target is not None:
            return _fits_one(target, tuple(res[1]))
        return self._fits(res[1])

    def open_edge(self, v: int) -> int:
        res = self._analyze(v)
        assert res is not None and res[0] == "open"
        return min(u for pair in res[2] for u in pair)

    # -- face candidates -------------------------------------------------------------

    def _pair_ok(self, face_so_far: list[int], y: int, last: bool) -> bool:
        """Face-intersection check for appending ``y`` to the partial face."""
        members = set(face_so_far)
        members.add(y)
        v = face_so_far[0]
        prev = face_so_far[-1]
        for gi in self.vfaces[y]:
            g = self.faces[gi]
            shared = [x for x in g if x in members]
            if len(shared) <= 1:
                continue
            if len(shared) > 2:
                return False
            x = shared[0] if shared[1] == y else shared[1]
            # shared pair must be an edge of g and of the new face
            n = len(g)
            i, j = g.index(x), g.index(y)
            if (i - j) % n not in (1, n - 1):
                return False
            if x == prev:
                continue
            if last and x == v:
                continue
            return False
        return True

    def _edge_free(self, a: int, b: int) -> bool:
        e = (a, b) if a < b else (b, a)
        return self.edge_cnt.get(e, 0) < 2

    def candidate_faces(self, v: int, a: int):
        """Yield each axiom-consistent face on the open side of edge (v, a), already added.

        The caller must call ``_remove_last_face`` (via ``pop``) after using it.
        """
        for p in self.sizes:
            yield from self._extend([v, a], p)

    def _extend(self, face: list[int], p: int):
        i = len(face)
        last = i == p - 1
        prev = face[-1]
        v = face[0]
        fresh_ok = self.n_max is None or self.n_labels < self.n_max
        cands = [y for y in range(self.n_labels) if self.closed[y] is None and y not in face]
        cands.append(-1)
        for y in cands:
            fresh = y < 0
            if fresh:
                if not fresh_ok:
                    continue
                y = self._new_label()
            else:
                if not self._edge_free(prev, y):
                    continue
                if last and not self._edge_free(y, v):
                    continue
                if not self._pair_ok(face, y, last):
                    continue
                if not self._corner_ok(y, prev, v if last else None, p):
                    continue
            self.nodes += 1
            if self.nodes > self.budget:
                if fresh:
                    self._drop_label()
                raise _Budget
            face.append(y)
            # cleanup runs even when the consumer abandons the generator
            try:
                if last:
                    if self._commit(tuple(face)):
                        try:
                            yield tuple(face)
                        finally:
                            self.pop()
                else:
                    yield from self._extend(face, p)
            finally:
                face.pop()
                if fresh:
                    self._drop_label()

    def candidates(self, v: int, a: int, limit: int | None = None) -> list[tuple[int, ...]]:
        """Faces that can fill the open side of (v, a); stops after ``limit`` + 1."""
        out = []
        gen = self.candidate_faces(v, a)
        try:
            for f in gen:
                out.append(f)
                if limit is not None and len(out) > limit:
                    break
        finally:
            gen.close()
        return out

    def apply(self, face: tuple[int, ...]) -> bool:
        """Add a face returned by ``candidates``; allocates its fresh labels."""
        while self.n_labels <= max(face):
            self._new_label()
        return self._commit(face)

    def retract(self, n_labels: int) -> None:
        self.pop()
        while self.n_labels > n_labels:
            self._drop_label()

    def _state_ok(self, v: int, fans: list[tuple[int, ...]]) -> bool:
        target = self.forced.get(v)
        if target is not None:
            return _fits_one(target, tuple(fans))
        return self._fits(fans)

    def _closed_ok(self, v: int, seq: tuple[int, ...]) -> bool:
        c = canonical_cyclic(seq)
        return c in self.allowed and self.forced.get(v, c) == c

    def _corner_ok(self, y: int, prev: int, nxt: int | None, p: int) -> bool:
        """Can existing vertex ``y`` take a p-gon corner between ``prev`` and ``nxt``?

        ``nxt`` is None while the face is still being built; every way the
        corner could attach on that side is then allowed.
        """
        res = self._analyze(y)
        if res is None or res[0] != "open":
            return False
        fans, ends = res[1], res[2]
        rest = list(range(len(fans)))
        ext: tuple[int, ...] = (p,)
        a_idx = -1
        for i, (u, w) in enumerate(ends):
            if prev == u:
                ext, a_idx = fans[i][::-1] + (p,), i
                break
            if prev == w:
                ext, a_idx = fans[i] + (p,), i
                break
        if a_idx >= 0:
            rest.remove(a_idx)
        a_far = None
        if a_idx >= 0:
            u, w = ends[a_idx]
            a_far = w if prev == u else u
        options = []
        if nxt is None or all(nxt not in e for e in ends):
            options.append(("open", [fans[i] for i in rest] + [ext]))
        for j in rest:
            u, w = ends[j]
            if nxt is None or nxt in (u, w):
                for end, merged in ((u, ext + fans[j]), (w, ext + fans[j][::-1])):
                    if nxt is None or nxt == end:
                        options.append(("open", [fans[i] for i in rest if i != j] + [merged]))
        if a_far is not None and not rest and (nxt is None or nxt == a_far):
            options.append(("closed", ext))
        for kind, val in options:
            if kind == "closed":
                if self._closed_ok(y, val):
                    return True
            elif self._state_ok(y, val):
                return True
        return False

    def _drop_label(self) -> None:
        self.vfaces.pop()
        self.corners.pop()
        self.closed.pop()
        self.n_labels -= 1

    def _commit(self, face: tuple[int, ...]) -> bool:
        saved = [self.closed[x] for x in face]
        self._add_face(face)
        for x in face:
            if not self._vertex_ok(x):
                self._remove_last_face()
                for x2, s in zip(face, saved):
                    self.closed[x2] = s
                return False
        self._undo_closed.append(saved)
        return True

    def pop(self) -> None:
        face = self.faces[-1]
        saved = self._undo_closed.pop()
        self._remove_last_face()
        for x, s in zip(face, saved):
            self.closed[x] = s

    # -- export ----------------------------------------------------------------------

    def first_open(self, among=None) -> int | None:
        rng = range(self.n_labels) if among is None else among
        for x in rng:
            if self.closed[x] is None:
                return x
        return None

    def to_map(self) -> Map:
        return build_map(self.n_labels, self.faces)


# ---------------------------------------------------------------------------
# enumeration


def _seed_sequence(t: MapType) -> FaceSequence:
    # the longer link fixes more labels up front
    return max(t.sequences, key=lambda s: (s.link_length, s.sizes))


def _explore(engine: _Engine, found: dict[bytes, Map]) -> None:
    v = engine.first_open()
    if v is None:
        present = {engine.closed[x] for x in range(engine.n_labels)}
        if present == engine.allowed:
            m = engine.to_map()
            found.setdefault(canonical_form(m).data, m)
        return
    a = engine.open_edge(v)
    for _ in engine.candidate_faces(v, a):
        _explore(engine, found)


def _top_branches(t: MapType, n_max: int) -> list[tuple[int, ...]]:
    eng = _Engine(t, _seed_sequence(t), n_max, DEFAULT_BUDGET)
    v = eng.first_open()
    if v is None:
        return []
    a = eng.open_edge(v)
    return [f for f in eng.candidate_faces(v, a)]


def _run_branch(args) -> tuple[list[tuple[int, tuple]], int, bool]:
    t_text, n_max, budget, first_face = args
    t = parse_type(t_text)
    eng = _Engine(t, _seed_sequence(t), n_max, budget)
    found: dict[bytes, Map] = {}
    exceeded = False
    try:
        if first_face is None:
            _explore(eng, found)
        else:
            labels_needed = max(first_face) + 1
            while eng.n_labels < labels_needed:
                eng._new_label()
            if eng._commit(first_face):
                _explore(eng, found)
    except _Budget:
        exceeded = True
    maps = [(m.n_vertices, m.faces) for m in found.values()]
    return maps, eng.nodes, exceeded


def enumerate_maps(
    map_type: MapType | str,
    n_max: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> SearchReport:
    t = _check_pair(map_type)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if budget < 1:
        raise ValueError("budget must be at least 1")
    seed = _seed_sequence(t)
    if seed.link_length + 1 > n_max:
        return SearchReport(t, n_max, (), 0, SearchStatus.COMPLETE, seed)

    branches = _top_branches(t, n_max)
    jobs = [(t.display, n_max, budget, b) for b in branches]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_branch, jobs))
    else:
        results = [_run_branch(j) for j in jobs]

    found: dict[bytes, Map] = {}
    nodes = len(branches)
    exceeded = False
    for maps, n, ex in results:
        nodes += n
        exceeded |= ex
        for nv, faces in maps:
            m = build_map(nv, faces)
            found.setdefault(canonical_form(m).data, m)
    if nodes > budget:
        exceeded = True
    ordered = tuple(found[k] for k in sorted(found))
    status = SearchStatus.BUDGET_EXCEEDED if exceeded else SearchStatus.COMPLETE
    return SearchReport(t, n_max, ordered, nodes, status, seed)


# ---------------------------------------------------------------------------
# local obstruction


def _distances(engine: _Engine) -> list[int]:
    inf = 1 << 30
    dist = [inf] * engine.n_labels
    dist[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for fi in engine.vfaces[x]:
                for y in engine.faces[fi]:
                    if dist[y] == inf:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
        frontier = nxt
    return dist


_PROBE = 2
_FRESH_COST = 2
_FAR = 4


def _order_candidates(engine: _Engine, faces: list[tuple[int, ...]]) -> None:
    # reuse vertices close to the wheel being filled before inventing new ones
    v = faces[0][0]
    n = engine.n_labels
    dist = {v: 0}
    frontier = [v]
    for d in range(1, _FAR):
        nxt = []
        for x in frontier:
            for fi in engine.vfaces[x]:
                for y in engine.faces[fi]:
                    if y not in dist:
                        dist[y] = d
                        nxt.append(y)
        frontier = nxt
    faces.sort(key=lambda f: sum(_FRESH_COST if x >= n else dist.get(x, _FAR) for x in f[2:]))


def _complete_ball(engine: _Engine, radius: int) -> bool:
    """True when the wheels of every vertex within ``radius`` of vertex 0 can be closed."""
    dist = _distances(engine)
    required = [x for x in range(engine.n_labels) if engine.closed[x] is None and dist[x] <= radius]
    if not required:
        return True
    # expand the most constrained of the few fullest wheels first
    required.sort(key=lambda x: (x not in engine.forced, -len(engine.corners[x]), dist[x], x))
    best: list[tuple[int, ...]] | None = None
    for v in required[:_PROBE]:
        a = engine.open_edge(v)
        cands = engine.candidates(v, a, None if best is None else len(best))
        if best is None or len(cands) < len(best):
            best = cands
            if len(best) <= 1:
                break
    if not best:
        return False
    if len(best) > 1:
        _order_candidates(engine, best)
    n_labels = engine.n_labels
    for face in best:
        if not engine.apply(face):
            continue
        try:
            if _complete_ball(engine, radius):
                return True
        finally:
            engine.retract(n_labels)
    return False


def _link_orbit_representatives(seed: FaceSequence) -> list[int]:
    """Link vertices of the seed wheel, one per orbit of the wheel's symmetries."""
    eng = _Engine(MapType((seed,)), seed, None, 1)
    faces = {frozenset(f) for f in eng.faces}
    L = seed.link_length
    cycle = list(range(1, L + 1))
    syms = []
    for flip in (False, True):
        base = cycle[::-1] if flip else cycle
        for k in range(L):
            img = base[k:] + base[:k]
            perm = {0: 0, **{cycle[i]: img[i] for i in range(L)}}
            if {frozenset(perm[x] for x in f) for f in faces} == faces:
                syms.append(perm)
    return sorted({min(perm[w] for perm in syms) for w in cycle})


def _attempt(t: MapType, seed: FaceSequence, w: int, radius: int, limit: int) -> tuple[bool | None, int]:
    """(completable?, nodes) for partner ``w`` of the seed; None when the limit was hit."""
    other = next(s for s in t.sequences if s != seed).sizes
    eng = _Engine(t, seed, None, limit)
    eng.forced[w] = other
    if not eng._vertex_ok(w):
        return False, 0
    try:
        return _complete_ball(eng, radius), eng.nodes
    except _Budget:
        return None, eng.nodes


DEFAULT_OBSTRUCTION_BUDGET = 3 * 10**4
_FIRST_LIMIT = 2000


def critical_vertex_obstruction(
    map_type: MapType | str, radius: int, budget: int = DEFAULT_OBSTRUCTION_BUDGET
) -> Verdict:
    """Try to rule out the type by completing wheels around a critical vertex.

    A map of a two-sequence type has an edge joining a vertex of each
    sequence, so for either choice of sequence at a seed vertex some link
    vertex carries the other one. The seed's link vertices are tried as that
    partner up to the symmetries of the seed wheel, and every consistent way of
    closing the wheels within ``radius`` face-steps of the seed is searched.
    If some seed choice admits no such completion, no map of the type exists at
    any size. Radius 1 closes the wheels of the seed's link, radius 2 also
    those of their links.

    Attempts run round-robin under a node limit that grows by a factor of 4 per
    round, so an easy refutation or completion is not starved by a hard one.
    ``budget`` bounds the total nodes; running out gives ``Unknown``.
    """
    t = _check_pair(map_type)
    if radius < 1:
        raise ValueError("radius must be at least 1")
    if budget < 1:
        raise ValueError("budget must be at least 1")
    seeds = sorted(t.sequences, key=lambda s: (-s.link_length, s.sizes))
    pending = {s: _link_orbit_representatives(s) for s in seeds}
    spent = 0
    limit = _FIRST_LIMIT
    while True:
        for seed in seeds:
            ws = pending[seed]
            if ws is None:
                continue
            still = []
            for w in ws:
                if spent >= budget:
                    return Verdict.UNKNOWN
                ok, nodes = _attempt(t, seed, w, radius, min(limit, budget - spent))
                spent += nodes
                if ok:
                    pending[seed] = None
                    break
                if ok is None:
                    still.append(w)
            else:
                if not still:
                    return Verdict.OBSTRUCTED
                pending[seed] = still
        if all(ws is None for ws in pending.values()):
            return Verdict.UNKNOWN
        limit *= 4
