import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from p5cert.canon import canonical_form
from p5cert.detect import find_induced_p5
from p5cert.enumeration import (
    connected_graphs,
    enumerate_mn3p5,
    generate_p5free_corpus,
)
from p5cert.graphs import CapabilityError, is_connected, to_graph6

from conftest import CONNECTED_COUNTS


def test_connected_counts_match_published(connected_upto_7):
    # The fixture already asserts the counts; re-state the anchor values.
    assert {n: len(v) for n, v in connected_upto_7.items()} == {
        1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853,
    }


def test_census_to_5():
    result = enumerate_mn3p5(5)
    assert [f.matched for f in result.found] == ["K4"]
    assert result.generated == {1: 1, 2: 1, 3: 2, 4: 6, 5: 17}
    assert not result.has_unknown


def test_census_to_7():
    result = enumerate_mn3p5(7)
    assert [f.matched for f in result.found] == ["K4", "W5", "S1", "S2"]
    assert [f.graph.n for f in result.found] == [4, 6, 7, 7]
    assert not result.has_unknown


def test_census_unpruned_counts_match_connected_counts():
    result = enumerate_mn3p5(7, prune=False)
    assert result.generated == {n: CONNECTED_COUNTS[n] for n in range(1, 8)}


def test_pruned_and_unpruned_survivors_agree():
    pruned = enumerate_mn3p5(7, prune=True)
    unpruned = enumerate_mn3p5(7, prune=False)
    assert [f.form for f in pruned.found] == [f.form for f in unpruned.found]
    assert pruned.survivors == unpruned.survivors


def test_parallel_census_matches_sequential():
    seq = enumerate_mn3p5(7, jobs=1)
    par = enumerate_mn3p5(7, jobs=2)
    assert [f.form for f in seq.found] == [f.form for f in par.found]
    assert seq.generated == par.generated


def test_census_bounds():
    with pytest.raises(CapabilityError):
        enumerate_mn3p5(11)
    with pytest.raises(CapabilityError):
        enumerate_mn3p5(0)


def test_survivors_pass_the_gate():
    from p5cert.critical import mn3p5_check

    result = enumerate_mn3p5(7)
    for found in result.found:
        assert mn3p5_check(found.graph).verdict


def test_no_duplicate_forms_in_generation(connected_upto_7):
    for graphs in connected_upto_7.values():
        forms = {canonical_form(g) for g in graphs}
        assert len(forms) == len(graphs)
        for g in graphs:
            assert is_connected(g)


def test_corpus_is_p5free_and_connected():
    for g in generate_p5free_corpus(12, 25, seed=3):
        assert find_induced_p5(g) is None
        assert is_connected(g)


def test_corpus_deterministic_per_seed():
    a = generate_p5free_corpus(10, 20, seed=5)
    b = generate_p5free_corpus(10, 20, seed=5)
    assert [to_graph6(g) for g in a] == [to_graph6(g) for g in b]
    c = generate_p5free_corpus(10, 20, seed=6)
    assert [to_graph6(g) for g in a] != [to_graph6(g) for g in c]


def test_corpus_single_vertex():
    graphs = generate_p5free_corpus(1, 4, seed=0)
    assert len(graphs) == 4
    assert all(g.n == 1 for g in graphs)


@given(st.integers(min_value=2, max_value=16), st.integers(min_value=0, max_value=2**30))
@settings(max_examples=40, deadline=None)
def test_corpus_postconditions_hold(n, seed):
    (g,) = generate_p5free_corpus(n, 1, seed)
    assert g.n == n
    assert find_induced_p5(g) is None
    assert is_connected(g)
