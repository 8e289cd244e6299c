"""Parsing, embedding, face tracing, validation, and serialization."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from dtargets.corpus import load_fixture
from dtargets.errors import (
    AsymmetricRotation,
    DuplicateNeighbour,
    EulerViolation,
    MissingMultiplicity,
    NegativeMultiplicity,
    ParseError,
)
from dtargets.planar import (
    DTarget,
    RotationGraph,
    norm_edge,
    other_region,
    parse_dtarget,
    region_pair,
    serialize_dtarget,
    validate,
)

from conftest import FIXTURES

EXPECTED_FACE_PROFILE = {
    # name: (vertex count, edge count, sorted face lengths)
    "k4": (4, 6, [3, 3, 3, 3]),
    "prism": (6, 9, [3, 3, 4, 4, 4]),
    "cube": (8, 12, [4, 4, 4, 4, 4, 4]),
    "octahedron": (6, 12, [3, 3, 3, 3, 3, 3, 3, 3]),
    "pentagonal_prism": (10, 15, [4, 4, 4, 4, 4, 5, 5]),
}


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_shape(name):
    t = load_fixture(name)
    vertices, edges, face_lengths = EXPECTED_FACE_PROFILE[name]
    assert t.vertex_count == vertices
    assert len(t.graph.edges) == edges
    assert sorted(r.length for r in t.graph.faces) == face_lengths
    assert vertices - edges + len(t.graph.faces) == 2


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_validates(name):
    report = validate(load_fixture(name))
    assert report.degree_ok
    assert report.euler_ok
    assert report.connectivity_level == 3
    assert report.violations == ()


@pytest.mark.parametrize("name", FIXTURES)
def test_round_trip(name):
    t = load_fixture(name)
    again = parse_dtarget(serialize_dtarget(t))
    assert again.graph.rotations == t.graph.rotations
    assert again.mult_items == t.mult_items
    assert again.d == t.d


def test_face_traces_partition_darts(fixture_target):
    t = fixture_target
    darts = set()
    for r in t.graph.faces:
        for dart in r.directed:
            assert dart not in darts
            darts.add(dart)
    expected = {(u, v) for u, v in t.graph.edges} | {
        (v, u) for u, v in t.graph.edges
    }
    assert darts == expected


def test_region_pair_and_other_region(fixture_target):
    t = fixture_target
    for e in t.graph.edges:
        r1, r2 = region_pair(t, e)
        assert r1.id != r2.id
        assert e in r1.edge_set and e in r2.edge_set
        assert other_region(t, e, r1).id == r2.id
        assert other_region(t, e, r2).id == r1.id


def test_known_prism_faces():
    t = load_fixture("prism")
    face_vertex_sets = {frozenset(r.vertices) for r in t.graph.faces}
    assert frozenset({0, 1, 2}) in face_vertex_sets
    assert frozenset({3, 4, 5}) in face_vertex_sets
    assert frozenset({0, 1, 4, 3}) in face_vertex_sets
    assert frozenset({1, 2, 5, 4}) in face_vertex_sets
    assert frozenset({0, 2, 5, 3}) in face_vertex_sets


def test_parse_rejects_asymmetric_rotation():
    text = (
        "dtarget d=8\n"
        "vertex 0: 1\n"
        "vertex 1: 0\n"
        "vertex 2: 0\n"  # 2 lists 0, but 0 does not list 2
        "mult 0 1 8\n"
        "mult 0 2 0\n"
    )
    with pytest.raises(AsymmetricRotation):
        parse_dtarget(text)


def test_parse_rejects_duplicate_neighbour():
    text = (
        "dtarget d=8\n"
        "vertex 0: 1 1\n"
        "vertex 1: 0 0\n"
        "mult 0 1 8\n"
    )
    with pytest.raises(DuplicateNeighbour):
        parse_dtarget(text)


def test_parse_rejects_missing_multiplicity():
    t = load_fixture("k4")
    text = serialize_dtarget(t)
    lines = [
        line for line in text.splitlines() if not line.startswith("mult 0 1")
    ]
    with pytest.raises(MissingMultiplicity):
        parse_dtarget("\n".join(lines))


def test_parse_rejects_negative_multiplicity():
    t = load_fixture("k4")
    text = serialize_dtarget(t).replace("mult 0 1 4", "mult 0 1 -1")
    with pytest.raises(NegativeMultiplicity):
        parse_dtarget(text)


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_dtarget("this is not a target\n")


def test_nonplanar_rotation_system_rejected():
    # K4 with vertex 0's rotation order flipped: the face trace no longer
    # closes into V - E + F = 2.
    t = load_fixture("k4")
    rots = list(t.graph.rotations)
    rots[0] = tuple(reversed(rots[0]))
    bad = DTarget.of(RotationGraph(tuple(rots)), 8, dict(t.mult_items))
    report = validate(bad)
    assert not report.euler_ok
    assert ("euler", None) in report.violations
    with pytest.raises(EulerViolation):
        _ = bad.graph.faces


def test_validate_flags_bad_degrees():
    t = load_fixture("k4")
    bad = t.with_mult({**dict(t.mult_items), (0, 1): 5})
    report = validate(bad)
    assert not report.degree_ok
    assert report.violations


def test_norm_edge():
    assert norm_edge(3, 1) == (1, 3)
    assert norm_edge(1, 3) == (1, 3)


@given(
    name=st.sampled_from(FIXTURES),
    data=st.data(),
)
def test_round_trip_any_multiplicities(name, data):
    base = load_fixture(name)
    mult = {
        e: data.draw(st.integers(min_value=0, max_value=8), label=str(e))
        for e in base.graph.edges
    }
    t = base.with_mult(mult)
    again = parse_dtarget(serialize_dtarget(t))
    assert again.mult_items == t.mult_items
    assert again.graph.rotations == t.graph.rotations
