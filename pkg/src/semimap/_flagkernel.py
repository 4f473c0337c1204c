"""Rooted flag-BFS encoding, compiled with numba when available.

Set ``SEMIMAP_DISABLE_JIT=1`` to run the same functions as plain Python on
lists, which is also what happens when numba is not installed.
"""

from __future__ import annotations

import os

import numpy as np

_disabled = os.environ.get("SEMIMAP_DISABLE_JIT", "").strip().lower() in ("1", "true", "yes")

try:
    if _disabled:
        raise ImportError
    from numba import njit as _njit

    def jit(func):
        return _njit(cache=True, nogil=True)(func)

    BACKEND = "numba"
except ImportError:
    def jit(func):
        return func

    BACKEND = "python"


@jit
def rooted_code(s0, s1, s2, root, best, have_best, label, order, code):
    """Write the BFS code from ``root`` into ``code`` and compare it with ``best``.

    Returns -1 when the code is smaller (or there is no best yet), 0 when equal
    and 1 as soon as it is known to be larger, in which case ``code`` is partial.
    """
    n = len(s0)
    for i in range(n):
        label[i] = -1
    label[root] = 0
    order[0] = root
    nxt = 1
    head = 0
    pos = 0
    cmp = 0 if have_best else -1
    while head < nxt:
        f = order[head]
        head += 1
        for t in range(3):
            if t == 0:
                g = s0[f]
            elif t == 1:
                g = s1[f]
            else:
                g = s2[f]
            if label[g] < 0:
                label[g] = nxt
                order[nxt] = g
                nxt += 1
            c = label[g]
            code[pos] = c
            if cmp == 0:
                if c < best[pos]:
                    cmp = -1
                elif c > best[pos]:
                    return 1
            pos += 1
    return cmp


@jit
def minimal_code(s0, s1, s2, best, label, order, code):
    """Fill ``best`` with the least rooted code; return (roots achieving it, first such root)."""
    n = len(s0)
    n_best = 0
    best_root = -1
    for root in range(n):
        r = rooted_code(s0, s1, s2, root, best, n_best > 0, label, order, code)
        if r < 0:
            for i in range(3 * n):
                best[i] = code[i]
            n_best = 1
            best_root = root
        elif r == 0:
            n_best += 1
    return n_best, best_root


@jit
def bfs_order(s0, s1, s2, root, label, order):
    n = len(s0)
    for i in range(n):
        label[i] = -1
    label[root] = 0
    order[0] = root
    nxt = 1
    head = 0
    while head < nxt:
        f = order[head]
        head += 1
        for t in range(3):
            if t == 0:
                g = s0[f]
            elif t == 1:
                g = s1[f]
            else:
                g = s2[f]
            if label[g] < 0:
                label[g] = nxt
                order[nxt] = g
                nxt += 1
    return nxt


def buffers(n_flags: int):
    if BACKEND == "numba":
        return (
            np.empty(3 * n_flags, dtype=np.int64),
            np.empty(n_flags, dtype=np.int64),
            np.empty(n_flags, dtype=np.int64),
            np.empty(3 * n_flags, dtype=np.int64),
        )
    return [0] * (3 * n_flags), [0] * n_flags, [0] * n_flags, [0] * (3 * n_flags)


def as_backend(arr: np.ndarray):
    return arr if BACKEND == "numba" else arr.tolist()
