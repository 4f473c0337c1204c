from __future__ import annotations

from itertools import combinations

import pytest

from semimap.catalog import UnknownName, catalog_entries, export, lookup, names
from semimap.facetypes import candidate_type_tables, map_type, parse_type
from semimap.isomorphism import canonical_form, char_poly
from semimap.map_core import SurfaceKind, classify_surface, curvature, euler_characteristic, face_sequence, read_map

from reference_values import CHAR_POLYS, parse_poly

ENTRIES = catalog_entries()


def test_size_and_surface_split():
    assert len(ENTRIES) == 30
    kinds = [e.surface for e in ENTRIES]
    assert kinds.count(SurfaceKind.TORUS) == 17
    assert kinds.count(SurfaceKind.KLEIN_BOTTLE) == 13


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_entry_is_consistent(entry):
    m = entry.map
    assert euler_characteristic(m) == 0
    assert classify_surface(m).kind is entry.surface
    assert map_type(m) == entry.map_type
    assert entry.map_type in candidate_type_tables().set_B
    assert all(curvature(face_sequence(m, v)) == 0 for v in range(m.n_vertices))
    assert m.n_vertices <= 12


def test_pairwise_non_isomorphic():
    pairs = list(combinations(ENTRIES, 2))
    assert len(pairs) == 435
    for a, b in pairs:
        assert canonical_form(a.map) != canonical_form(b.map), (a.name, b.name)


def test_klein_bottle_entry_with_eleven_vertices():
    d = lookup("D1(K)")
    assert d.n_vertices == 11
    assert d.map_type == parse_type("[3^6:3^2.4.3.4]")
    assert d.surface is SurfaceKind.KLEIN_BOTTLE


def test_entry_char_poly():
    assert char_poly(lookup("E13(T)").map).coefficients == parse_poly(CHAR_POLYS["E13(T)"])


@pytest.mark.parametrize("query,name", [("A2(T)", "A2(T)"), ("a2", "A2(T)"), ("  e13(t) ", "E13(T)"), ("d1", "D1(K)")])
def test_lookup(query, name):
    assert lookup(query).name == name


def test_lookup_unknown_suggests():
    with pytest.raises(UnknownName) as info:
        lookup("Z9")
    assert info.value.suggestion in names()
    assert "did you mean" in str(info.value)


def test_names_are_unique():
    assert len(set(names())) == len(names())


def test_export_round_trip(tmp_path):
    paths = export(tmp_path)
    assert len(paths) == 30
    for e, p in zip(ENTRIES, paths):
        assert p.endswith(f"{e.name}.map")
        assert canonical_form(read_map(p)) == canonical_form(e.map)
