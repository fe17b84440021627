import json

import pytest
from hypothesis import given, settings, strategies as st

from hookchars.limits import ResourceLimitError
from hookchars.partitions import (
    conjugate,
    hook_partitions,
    in_hook,
    partitions_of,
    strict_hook_partitions,
)
from hookchars.tableaux import (
    GradedAlphabet,
    Tableau,
    count_ssyt,
    count_super_ssyt,
    enumerate_super_ssyt,
    hook_content_count,
    iter_super_ssyt,
)
from oracles import brute_super_ssyt, strip_chain_count


def test_count_ssyt_examples():
    for k in range(6):
        assert count_ssyt((1,), k) == k
    for n in range(1, 8):
        assert count_ssyt((n,), 1) == 1
    assert count_ssyt((2, 1), 2) == 2
    assert count_ssyt((1, 1, 1), 2) == 0


def test_ssyt_21_over_two_letters_listing():
    rows = sorted(t.rows for t in enumerate_super_ssyt((2, 1), 2, 0))
    assert rows == [((0, 0), (1,)), ((0, 1), (1,))]


@pytest.mark.parametrize("n", range(0, 9))
def test_hook_content_agrees_with_counting(n):
    for lam in partitions_of(n):
        for k in range(5):
            assert count_super_ssyt(lam, k, 0) == hook_content_count(lam, k)


@pytest.mark.parametrize("n", range(0, 6))
def test_counts_match_brute_filling(n):
    for lam in partitions_of(n):
        for k in range(3):
            for l in range(3):
                if (k + l) ** n > 20000:
                    continue
                assert count_super_ssyt(lam, k, l) == brute_super_ssyt(lam, k, l), (lam, k, l)


@pytest.mark.parametrize("n", range(0, 9))
def test_counts_match_strip_chains(n):
    for lam in partitions_of(n):
        for k in range(4):
            for l in range(4):
                assert count_super_ssyt(lam, k, l) == strip_chain_count(lam, k, l)


@pytest.mark.parametrize("n", range(0, 9))
def test_l_zero_is_classical(n):
    for lam in partitions_of(n):
        for k in range(5):
            assert count_super_ssyt(lam, k, 0) == count_ssyt(lam, k)


@pytest.mark.parametrize("n", range(1, 9))
def test_zero_exactly_outside_hook(n):
    for lam in partitions_of(n):
        for k in range(4):
            for l in range(4):
                assert (count_super_ssyt(lam, k, l) == 0) == (not in_hook(lam, k, l))


@pytest.mark.parametrize("n", range(0, 9))
def test_conjugate_duality(n):
    for lam in partitions_of(n):
        for k in range(4):
            for l in range(4):
                assert count_super_ssyt(lam, k, l) == count_super_ssyt(conjugate(lam), l, k)


def test_paper_special_values():
    for n in range(1, 9):
        for lam in hook_partitions(1, 1, n):
            assert count_super_ssyt(lam, 1, 1) == 2
        assert count_super_ssyt((n,), 2, 1) == 2 * n + 1
        for lam in strict_hook_partitions(2, 1, n):
            assert count_super_ssyt(lam, 2, 1) == 4 * (lam[0] - lam[1] + 1)


def test_enumeration_examples():
    only = enumerate_super_ssyt((1, 1), 0, 1)
    assert [t.to_names() for t in only] == [[["u1"], ["u1"]]]
    assert enumerate_super_ssyt((2,), 0, 1) == []
    assert sorted(t.to_json() for t in enumerate_super_ssyt((2, 1), 1, 1)) == [
        '[["t1", "t1"], ["u1"]]',
        '[["t1", "u1"], ["u1"]]',
    ]


@pytest.mark.parametrize("shape,k,l", [((3, 1), 2, 1), ((2, 2, 1), 2, 2), ((4,), 1, 2), ((2, 1, 1), 0, 3)])
def test_enumeration_is_exact_and_valid(shape, k, l):
    tabs = enumerate_super_ssyt(shape, k, l)
    assert len(tabs) == count_super_ssyt(shape, k, l)
    assert len({t.rows for t in tabs}) == len(tabs)
    assert all(t.is_valid() for t in tabs)
    # cell-major order with letters tried in increasing order is lexicographic in the flattened filling
    flat = [sum(t.rows, ()) for t in tabs]
    assert flat == sorted(flat)


def test_enumeration_ceiling():
    with pytest.raises(ResourceLimitError):
        enumerate_super_ssyt((3, 1), 3, 0, limit=5)


def test_enumeration_ceiling_from_env(monkeypatch):
    monkeypatch.setenv("HOOKCHARS_MAX_TABLEAUX", "3")
    with pytest.raises(ResourceLimitError):
        enumerate_super_ssyt((2,), 3, 0)


def test_tableau_validation_rules():
    alpha = GradedAlphabet(1, 1)
    t1, u1 = 0, 1
    shape = (2, 1)
    assert Tableau(shape, ((t1, u1), (u1,)), alpha).is_valid()
    # t repeated in a column
    assert not Tableau((1, 1), ((t1,), (t1,)), alpha).is_valid()
    # u repeated in a row
    assert not Tableau((2,), ((u1, u1),), alpha).is_valid()
    # decreasing along a row
    assert not Tableau((2,), ((u1, t1),), alpha).is_valid()
    with pytest.raises(ValueError):
        Tableau((2,), ((t1,),), alpha)


def test_tableau_json_roundtrip():
    t = Tableau.from_names([["t1", "t2", "u1"], ["t2", "u1"]], 2, 1)
    assert t.shape == (3, 2)
    assert json.loads(t.to_json()) == [["t1", "t2", "u1"], ["t2", "u1"]]
    assert t[1, 0] == 1 and t.filling[(0, 2)] == 2
    with pytest.raises(ValueError):
        Tableau.from_names([["t3"]], 2, 1)


def test_alphabet():
    a = GradedAlphabet(2, 2)
    assert [a.name(i) for i in range(4)] == ["t1", "t2", "u1", "u2"]
    assert [a.is_odd(i) for i in range(4)] == [False, False, True, True]
    with pytest.raises(ValueError):
        GradedAlphabet(-1, 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(partitions_of(n))),
       st.integers(0, 3), st.integers(0, 3))
def test_iterator_and_counter_agree(lam, k, l):
    assert sum(1 for _ in iter_super_ssyt(lam, k, l)) == count_super_ssyt(lam, k, l)


def test_negative_letters_rejected():
    with pytest.raises(ValueError):
        count_super_ssyt((1,), -1, 0)
    with pytest.raises(ValueError):
        count_ssyt((1,), -1)
