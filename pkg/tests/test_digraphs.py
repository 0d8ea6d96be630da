"""Unit tests for pattern digraph copy counting."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tourcensus import (
    CopyCounter,
    Digraph2Spec,
    IllFormedError,
    ParseError,
    Tournament,
    TypeTooLongError,
    all_digraph_specs,
    check_complement_invariance,
    count_copies,
    count_cycles,
    count_paths,
    random_digraph_spec,
    star_counterexample,
    transitive,
)

TT3 = Tournament.parse("3:111")
TT4 = transitive(4)


def random_small(max_n=5):
    return st.integers(3, max_n).flatmap(
        lambda n: st.builds(
            Tournament, st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1)
        )
    )


# --- spec text form -----------------------------------------------------------

def test_parse_render_roundtrip():
    for text in ["V", "P(1)", "C(3)", "P(1,-1);C(1,-2);V;V"]:
        assert Digraph2Spec.parse(text).render() == text


def test_parse_sorts_components():
    assert Digraph2Spec.parse("V;C(1,-2);P(1,-1)").render() == "P(1,-1);C(1,-2);V"


def test_parse_canonicalizes_types():
    # (2,-1) read backwards is (1,-2); both name the same path class
    assert Digraph2Spec.parse("P(2,-1)").render() == "P(1,-2)"
    assert Digraph2Spec.parse("C(-1,2)").render() == "C(1,-2)"


def test_construction_canonicalizes_too():
    a = Digraph2Spec((("P", (2, -1)), ("P", (1, -2))))
    assert a.components == (("P", (1, -2)), ("P", (1, -2)))


def test_order_and_isolated():
    d = Digraph2Spec.parse("P(1,-1);C(1,-2);V;V")
    assert d.order == 8
    assert d.isolated == 2
    assert d.core() == (("P", (1, -1)), ("C", (1, -2)))


def test_parse_errors():
    with pytest.raises(ParseError):
        Digraph2Spec.parse("")
    with pytest.raises(ParseError):
        Digraph2Spec.parse("X(1)")
    with pytest.raises(ParseError):
        Digraph2Spec.parse("P(1,2)")  # same-sign adjacency
    with pytest.raises(ParseError):
        Digraph2Spec.parse("C(1,-1)")  # only 2 arcs, no such cycle
    with pytest.raises(ParseError):
        Digraph2Spec.parse("P(1);Q(2)")
    with pytest.raises(ParseError) as exc:
        Digraph2Spec.parse("P(x)")
    assert "byte" in str(exc.value)


def test_construction_rejects_garbage():
    with pytest.raises(IllFormedError):
        Digraph2Spec((("P",),))
    with pytest.raises(IllFormedError):
        Digraph2Spec((("C", (1, -1)),))


# --- copy counting -------------------------------------------------------------

def test_isolated_vertices_choose():
    assert count_copies(TT4, Digraph2Spec.parse("V;V")) == 6
    assert count_copies(TT4, Digraph2Spec.parse("V")) == 4
    assert count_copies(TT4, Digraph2Spec.parse("V;V;V;V")) == 1


def test_single_arc_copies():
    # every edge carries exactly one oriented arc, whatever its direction
    assert count_copies(TT4, Digraph2Spec.parse("P(1)")) == 6
    assert count_copies(TT3, Digraph2Spec.parse("P(1)")) == 3


def test_disjoint_arc_pairs():
    spec = Digraph2Spec.parse("P(1);P(1)")
    for T in (TT4, Tournament.parse("4:111011"), Tournament.parse("4:000000")):
        assert count_copies(T, spec) == 3  # one per perfect matching of K4


def test_triangle_copies_in_transitive():
    assert count_copies(TT4, Digraph2Spec.parse("C(1,-2)")) == 4
    assert count_copies(TT4, Digraph2Spec.parse("C(3)")) == 0
    assert count_copies(TT4, Digraph2Spec.parse("C(1,-2);V")) == 4


def test_pattern_larger_than_host():
    with pytest.raises(TypeTooLongError):
        count_copies(TT3, Digraph2Spec.parse("P(1,-1);P(1,-1)"))


@given(random_small())
@settings(max_examples=25, deadline=None)
def test_single_component_matches_direct_counts(T):
    # one-component patterns reduce to the plain path and cycle counters
    for tup in [(1,), (2,), (1, -1), (2, -1)]:
        if sum(abs(x) for x in tup) + 1 <= T.n:
            spec = Digraph2Spec((("P", tup),))
            assert count_copies(T, spec) == count_paths(T, tup)
    for tup in [(3,), (1, -2), (1, -3), (2, -2)]:
        if sum(abs(x) for x in tup) <= T.n:
            spec = Digraph2Spec((("C", tup),))
            assert count_copies(T, spec) == count_cycles(T, tup)


@given(random_small())
@settings(max_examples=25, deadline=None)
def test_counter_reuse_matches_one_shot(T):
    counter = CopyCounter(T)
    for text in ["P(1);V", "P(1,-1)", "C(1,-2);V", "P(1);P(1)"]:
        spec = Digraph2Spec.parse(text)
        if spec.order <= T.n:
            assert counter.count(spec) == count_copies(T, spec)


def test_check_complement_invariance_example():
    assert check_complement_invariance(TT3, Digraph2Spec.parse("P(1,-1)")) == (1, 1)


@given(random_small())
@settings(max_examples=20, deadline=None)
def test_complement_invariance_holds(T):
    for text in ["P(1)", "P(2)", "P(1,-1)", "C(1,-2)", "C(3)", "P(1);P(1)", "P(1);V"]:
        spec = Digraph2Spec.parse(text)
        if spec.order <= T.n:
            a, b = check_complement_invariance(T, spec)
            assert a == b


# --- inventories and sampling ---------------------------------------------------

def test_all_digraph_specs_small():
    assert [s.render() for s in all_digraph_specs(3)] == [
        "P(1)", "P(1);V", "P(1,-1)", "P(2)", "P(-1,1)",
        "C(1,-2)", "C(3)", "V", "V;V", "V;V;V",
    ]


def test_all_digraph_specs_bounded_and_unique():
    specs = all_digraph_specs(5)
    assert len(specs) == len({s.render() for s in specs})
    assert all(1 <= s.order <= 5 for s in specs)


def test_random_digraph_spec_deterministic():
    a = random_digraph_spec(6, 99)
    b = random_digraph_spec(6, 99)
    assert a == b
    assert a.order == 6
    assert random_digraph_spec(1, 3).order == 1


def test_random_digraph_spec_varies():
    seen = {random_digraph_spec(5, seed).render() for seed in range(30)}
    assert len(seen) > 3


# --- the one-sided counterexample -----------------------------------------------

def test_star_counterexample_values():
    assert star_counterexample(3) == (1, 0)
    assert star_counterexample(4) == (1, 0)
    assert star_counterexample(5) == (1, 0)


def test_star_counterexample_guard():
    with pytest.raises(TypeTooLongError):
        star_counterexample(2)
