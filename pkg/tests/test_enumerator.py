from __future__ import annotations

from itertools import combinations

import pytest

from naive_generator import naive_maps
from reference_values import CENSUS, OBSTRUCTED_CASES
from semimap.catalog import catalog_entries
from semimap.enumerator import (
    NonZeroCurvatureType,
    NotAPairType,
    SearchStatus,
    Verdict,
    critical_vertex_obstruction,
    enumerate_maps,
)
from semimap.facetypes import map_type, parse_type
from semimap.isomorphism import canonical_form
from semimap.map_core import build_map, curvature, face_sequence


def _certs(report):
    return {canonical_form(m).data for m in report.maps}


@pytest.mark.parametrize("type_text", sorted(CENSUS))
def test_found_maps_are_valid_and_distinct(type_text):
    r = enumerate_maps(type_text, 12)
    assert r.status is SearchStatus.COMPLETE
    t = parse_type(type_text)
    for m in r.maps:
        assert build_map(m.n_vertices, m.faces) == m
        assert map_type(m) == t
        assert all(curvature(face_sequence(m, v)) == 0 for v in range(m.n_vertices))
        assert m.n_vertices <= 12
    for a, b in combinations(r.maps, 2):
        assert canonical_form(a) != canonical_form(b)


@pytest.mark.parametrize("type_text,n_max", [
    ("[3^6:3^3.4^2]", 7),
    ("[3^6:3^3.4^2]", 8),
    ("[3^6:3^3.4^2]", 9),
    ("[3^6:3^3.4^2]", 10),
    ("[3^6:3^3.4^2]", 12),
    ("[3^3.4^2:4^4]", 10),
    ("[3^6:3^2.4.3.4]", 12),
    ("[3^3.4^2:3^2.4.3.4]", 12),
])
def test_agrees_with_naive_generator(type_text, n_max):
    naive = naive_maps(type_text, n_max)
    assert set(naive) == _certs(enumerate_maps(type_text, n_max))


def test_naive_generator_finds_nine_vertex_maps():
    assert len(naive_maps("[3^6:3^3.4^2]", 9)) == 4


def test_counts_grow_with_bound():
    sizes = [len(enumerate_maps("[3^6:3^3.4^2]", n).maps) for n in (8, 9, 10, 11, 12)]
    assert sizes == sorted(sizes)
    assert sizes[-1] == 13


@pytest.mark.parametrize("workers", [2, 8])
def test_same_output_for_any_worker_count(workers):
    base = enumerate_maps("[3^6:3^3.4^2]", 12)
    other = enumerate_maps("[3^6:3^3.4^2]", 12, workers=workers)
    assert other.maps == base.maps
    assert other.nodes == base.nodes


def test_repeatable():
    assert enumerate_maps("[3^3.4^2:4^4]", 12).maps == enumerate_maps("[3^3.4^2:4^4]", 12).maps


def test_results_match_catalog_for_a_type():
    r = enumerate_maps("[3^6:3^4.6]", 12)
    expected = {canonical_form(e.map).data for e in catalog_entries() if str(e.map_type) == "[3^6:3^4.6]"}
    assert _certs(r) == expected


def test_budget_is_reported_not_truncated():
    r = enumerate_maps("[3^6:3^3.4^2]", 12, budget=50)
    assert r.status is SearchStatus.BUDGET_EXCEEDED
    r2 = enumerate_maps("[3^6:3^3.4^2]", 12, budget=50, workers=2)
    assert r2.status is SearchStatus.BUDGET_EXCEEDED


def test_bound_below_one_wheel_gives_nothing():
    r = enumerate_maps("[3^6:3^4.6]", 8)
    assert r.maps == () and r.status is SearchStatus.COMPLETE


@pytest.mark.parametrize("type_text,err", [
    ("[3^6]", NotAPairType),
    ("[3^6:3^4.6:3^3.4^2]", NotAPairType),
    ("[3^7:3^6]", NonZeroCurvatureType),
])
def test_type_errors(type_text, err):
    with pytest.raises(err):
        enumerate_maps(type_text, 12)
    with pytest.raises(err):
        critical_vertex_obstruction(type_text, 2)


def test_argument_errors():
    with pytest.raises(ValueError):
        enumerate_maps("[3^6:3^4.6]", 0)
    with pytest.raises(ValueError):
        enumerate_maps("[3^6:3^4.6]", 12, budget=0)
    with pytest.raises(ValueError):
        critical_vertex_obstruction("[3^6:3^4.6]", 0)


@pytest.mark.parametrize("type_text", OBSTRUCTED_CASES)
def test_obstructed_types_have_no_maps(type_text):
    assert critical_vertex_obstruction(type_text, 2) is Verdict.OBSTRUCTED
    for n in (10, 12):
        assert enumerate_maps(type_text, n).maps == ()


@pytest.mark.parametrize("type_text", ["[3^3.4^2:3^2.6^2]", "[3^3.4^2:4.6.12]"])
def test_obstruction_holds_at_larger_radius(type_text):
    assert critical_vertex_obstruction(type_text, 3) is Verdict.OBSTRUCTED


@pytest.mark.parametrize("radius", [1, 2, 3])
def test_realizable_type_is_never_obstructed(radius):
    assert critical_vertex_obstruction("[3^6:3^4.6]", radius) is Verdict.UNKNOWN


def test_tiny_budget_gives_unknown():
    assert critical_vertex_obstruction("[3^3.4^2:3^4.6]", 2, budget=1) is Verdict.UNKNOWN
