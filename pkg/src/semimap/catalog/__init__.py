"""Named census of two-type curvature-0 maps on at most 12 vertices.

Entry names carry a series letter, an index and a surface tag: ``(T)`` for the
torus and ``(K)`` for the Klein bottle.
"""

from __future__ import annotations

import difflib
import os
import re
from dataclasses import dataclass
from functools import lru_cache

from ..facetypes import MapType, map_type, parse_type
from ..map_core import Map, SurfaceKind, build_map, write_map
from ._data import FACES

__all__ = ["CatalogEntry", "UnknownName", "catalog_entries", "lookup", "export", "names"]

_SERIES_TYPE = {
    "A": "[3^6:3^4.6]",
    "B": "[3^3.4^2:3.4.6.4]",
    "C": "[3^2.4.3.4:3.4.6.4]",
    "D": "[3^6:3^2.4.3.4]",
    "E": "[3^6:3^3.4^2]",
    "F": "[3^3.4^2:4^4]",
}


class UnknownName(KeyError):
    def __init__(self, name: str, suggestion: str | None):
        msg = f"no catalog entry named {name!r}"
        if suggestion:
            msg += f"; did you mean {suggestion}?"
        super().__init__(msg)
        self.name = name
        self.suggestion = suggestion

    def __str__(self) -> str:
        return self.args[0]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    map_type: MapType
    surface: SurfaceKind
    map: Map
    source: str

    @property
    def n_vertices(self) -> int:
        return self.map.n_vertices


def _surface_of(name: str) -> SurfaceKind:
    return SurfaceKind.TORUS if name.endswith("(T)") else SurfaceKind.KLEIN_BOTTLE


@lru_cache(maxsize=1)
def catalog_entries() -> tuple[CatalogEntry, ...]:
    out = []
    for name, (n, faces) in FACES.items():
        t = parse_type(_SERIES_TYPE[name[0]])
        m = build_map(n, faces)
        out.append(CatalogEntry(
            name=name,
            map_type=t,
            surface=_surface_of(name),
            map=m,
            source=f"reconstructed from the vertex links of the {t} classification on <=12 vertices",
        ))
    return tuple(out)


def names() -> list[str]:
    return [e.name for e in catalog_entries()]


def _key(name: str) -> str:
    return re.sub(r"\s+", "", name).upper()


def lookup(name: str) -> CatalogEntry:
    key = _key(name)
    entries = catalog_entries()
    for e in entries:
        if _key(e.name) == key:
            return e
    stem = [e for e in entries if _key(e.name).split("(")[0] == key]
    if len(stem) == 1:
        return stem[0]
    close = difflib.get_close_matches(key, [_key(e.name) for e in entries], n=1, cutoff=0.0)
    suggestion = None
    if close:
        suggestion = next(e.name for e in entries if _key(e.name) == close[0])
    raise UnknownName(name, suggestion)


def export(directory: str | os.PathLike) -> list[str]:
    """Write ``<name>.map`` for every entry; returns the paths written."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for e in catalog_entries():
        path = os.path.join(directory, f"{e.name}.map")
        write_map(e.map, path, comment=f"{e.name} {e.map_type} {e.surface.value}")
        paths.append(path)
    return paths

