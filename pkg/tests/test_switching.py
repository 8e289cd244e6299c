"""Score sequences, the descent order, and the two switching moves."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from dtargets.corpus import load_fixture
from dtargets.errors import (
    MismatchedD,
    NoCommonRegion,
    NotAFourCycle,
    WouldGoNegative,
)
from dtargets.planar import DTarget, serialize_dtarget, validate
from dtargets.switching import (
    add_zero_edge,
    is_smaller,
    is_switchable,
    score_sequence,
    score_smaller,
    switch_path,
    switch_square,
)

from gadgets import prism


def test_score_sequences_frozen():
    assert score_sequence(load_fixture("k4")) == (0, 0, 4, 0, 2, 0, 0, 0, 0)
    assert score_sequence(prism(2, 4)) == (0, 0, 6, 0, 3, 0, 0, 0, 0)
    assert score_sequence(load_fixture("octahedron")) == (
        0, 0, 12, 0, 0, 0, 0, 0, 0,
    )


def test_switch_square_octahedron_equator():
    t = load_fixture("octahedron")
    out = switch_square(t, 0, 1, 4, 5)
    assert out.m(0, 1) == 1
    assert out.m(1, 4) == 3
    assert out.m(4, 5) == 1
    assert out.m(0, 5) == 3
    for v in range(6):
        assert out.degree_sum(v) == 8
    assert score_sequence(out) == (0, 2, 8, 2, 0, 0, 0, 0, 0)
    assert is_smaller(out, t)
    assert is_switchable(t, 0, 1, 4, 5)


def test_switch_square_k4_cycle_not_smaller():
    t = load_fixture("k4")
    out = switch_square(t, 0, 1, 2, 3)
    assert (out.m(0, 1), out.m(1, 2), out.m(2, 3), out.m(0, 3)) == (3, 3, 3, 3)
    assert out.m(0, 2) == 2 and out.m(1, 3) == 2
    assert not is_smaller(out, t)
    assert not is_switchable(t, 0, 1, 2, 3)


def test_switch_square_would_go_negative():
    t = load_fixture("k4").with_mult(
        {(0, 1): 0, (2, 3): 0, (0, 2): 4, (0, 3): 4, (1, 2): 4, (1, 3): 4}
    )
    with pytest.raises(WouldGoNegative):
        switch_square(t, 0, 1, 2, 3)


def test_switch_square_requires_four_cycle():
    t = prism(2, 4)
    with pytest.raises(NotAFourCycle):
        switch_square(t, 0, 1, 2, 4)
    with pytest.raises(NotAFourCycle):
        switch_square(t, 0, 1, 1, 4)


def test_switch_square_inverse_is_bit_exact():
    t = prism(2, 4)
    forward = switch_square(t, 0, 1, 4, 3)
    back = switch_square(forward, 0, 3, 4, 1)
    assert back == t
    assert serialize_dtarget(back) == serialize_dtarget(t)


def test_add_zero_edge_identity_when_adjacent():
    t = prism(2, 4)
    assert add_zero_edge(t, 0, 1) == t


def test_add_zero_edge_splits_square():
    t = prism(2, 4)
    out = add_zero_edge(t, 0, 4)
    assert len(out.graph.edges) == 10
    assert out.m(0, 4) == 0
    assert validate(out).euler_ok
    lengths = sorted(r.length for r in out.graph.faces)
    assert lengths == [3, 3, 3, 3, 4, 4]


def test_add_zero_edge_no_common_region():
    t = load_fixture("octahedron")
    with pytest.raises(NoCommonRegion):
        add_zero_edge(t, 0, 4)


def test_switch_path_on_prism_verticals():
    t = prism(2, 4)
    out = switch_path(t, 3, 0, 1, 4)
    assert out.m(0, 3) == 3
    assert out.m(0, 1) == 3
    assert out.m(1, 4) == 3
    assert out.m(3, 4) == 3
    for v in range(6):
        assert out.degree_sum(v) == 8


def test_switch_path_creates_the_closing_edge():
    t = load_fixture("pentagonal_prism")
    out = switch_path(t, 0, 1, 2, 3)
    assert out.m(0, 3) == 1
    assert len(out.graph.edges) == 16
    assert out.m(0, 1) == 1
    assert out.m(1, 2) == 3
    assert out.m(2, 3) == 1
    for v in range(10):
        assert out.degree_sum(v) == 8


def test_switch_path_would_go_negative():
    t = prism(2, 4).with_mult(
        {
            (0, 1): 2, (0, 2): 2, (1, 2): 2,
            (3, 4): 2, (3, 5): 2, (4, 5): 2,
            (0, 3): 0, (1, 4): 4, (2, 5): 4,
        }
    )
    with pytest.raises(WouldGoNegative):
        switch_path(t, 3, 0, 1, 4)


def test_is_switchable_false_on_inapplicable_move():
    t = load_fixture("k4").with_mult(
        {(0, 1): 0, (2, 3): 0, (0, 2): 4, (0, 3): 4, (1, 2): 4, (1, 3): 4}
    )
    assert not is_switchable(t, 0, 1, 2, 3)
    assert not is_switchable(prism(2, 4), 0, 1, 2, 4)


def test_is_smaller_prefers_fewer_vertices():
    assert is_smaller(load_fixture("k4"), load_fixture("octahedron"))
    assert not is_smaller(load_fixture("octahedron"), load_fixture("k4"))


def test_is_smaller_irreflexive():
    t = load_fixture("prism")
    assert not is_smaller(t, t)


def test_is_smaller_requires_same_d():
    t = load_fixture("k4")
    six = DTarget.of(t.graph, 6, {e: 2 for e, _ in t.mult_items})
    with pytest.raises(MismatchedD):
        is_smaller(six, t)


def test_score_smaller_clause_precedence():
    # Clause 1: vertex count dominates everything.
    assert score_smaller(4, (9, 0, 0, 0, 0, 0, 0, 0, 0), 6, (0, 0, 12, 0, 0, 0, 0, 0, 0))
    # Clause 2 at i = 4: more multiplicity-4 edges, equal above.
    a = (0, 0, 0, 0, 3, 1, 1, 1, 1)
    b = (5, 5, 5, 5, 2, 1, 1, 1, 1)
    assert score_smaller(6, a, 6, b)
    assert not score_smaller(6, b, 6, a)
    # Clause 3: everything above multiplicity zero equal, fewer zeros win.
    c = (2, 1, 1, 1, 1, 1, 1, 1, 1)
    d = (3, 1, 1, 1, 1, 1, 1, 1, 1)
    assert score_smaller(6, c, 6, d)
    assert not score_smaller(6, d, 6, c)


def test_score_smaller_length_mismatch():
    with pytest.raises(MismatchedD):
        score_smaller(4, (0, 0, 0), 4, (0, 0, 0, 0))


SEQS = st.tuples(*[st.integers(min_value=0, max_value=6)] * 9)


@settings(max_examples=300, deadline=None)
@given(na=st.integers(4, 12), sa=SEQS, nb=st.integers(4, 12), sb=SEQS)
def test_score_smaller_matches_oracle(na, sa, nb, sb):
    assert score_smaller(na, sa, nb, sb) == oracles.smaller(na, sa, nb, sb)
    # Asymmetry: both directions never hold at once.
    assert not (
        score_smaller(na, sa, nb, sb) and score_smaller(nb, sb, na, sa)
    )


@settings(max_examples=150, deadline=None)
@given(
    data=st.data(),
)
def test_random_square_switches_preserve_degrees_and_invert(data):
    t = prism(2, 4)
    cycles = [
        (0, 1, 4, 3),
        (1, 2, 5, 4),
        (0, 2, 5, 3),
    ]
    u, v, w, x = data.draw(st.sampled_from(cycles))
    if t.m(u, v) < 1 or t.m(w, x) < 1:
        return
    out = switch_square(t, u, v, w, x)
    for z in range(t.vertex_count):
        assert out.degree_sum(z) == t.degree_sum(z)
    assert switch_square(out, u, x, w, v) == t
