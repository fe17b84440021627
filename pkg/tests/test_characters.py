import json
import random
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from hookchars.characters import (
    CharacterCache,
    CharacterTable,
    character,
    character_table,
    class_size,
    clear_memo,
    dimension,
    remove_border_strips,
)
from hookchars.limits import ResourceLimitError
from hookchars.partitions import Partition, conjugate, partitions_of
from oracles import brute_class_sizes, frobenius_character, standard_tableaux_count


def test_trivial_and_sign():
    for n in range(1, 9):
        for mu in partitions_of(n):
            assert character((n,), mu) == 1
            assert character((1,) * n, mu) == (-1) ** (n - len(mu))


def test_s3_values():
    assert character((2, 1), (3,)) == -1
    assert character((2, 1), (1, 1, 1)) == 2
    assert character((2, 1), (2, 1)) == 0


@pytest.mark.parametrize("n", range(7))
def test_matches_frobenius_formula(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert character(lam, mu) == frobenius_character(lam, mu), (lam, mu)


def test_size_mismatch():
    with pytest.raises(ValueError):
        character((2, 1), (2,))


def test_border_strip_removal():
    assert remove_border_strips((3, 1), 2) == [((1, 1), 0)]
    # ordered by top row: the vertical domino starts in row 0
    assert remove_border_strips((2, 2), 2) == [((1, 1), 1), ((2,), 0)]
    strips = remove_border_strips((2, 1), 3)
    assert strips == [((), 1)]
    assert remove_border_strips((2, 2), 3) == [((1,), 1)]
    assert remove_border_strips((2, 2), 4) == []


def test_table_small():
    assert character_table(1).values == [[1]]
    t = character_table(2)
    assert t.lambdas == [(2,), (1, 1)]
    # rows lambda = (2), (1,1); columns mu = (2), (1,1)
    assert t.values == [[1, 1], [-1, 1]]
    assert t[(1, 1), (2,)] == -1
    assert len(t.entries) == 4


def test_table_ceiling():
    with pytest.raises(ResourceLimitError):
        character_table(15)


@pytest.mark.parametrize("n", range(1, 10))
def test_degree_sum(n):
    t = character_table(n)
    identity = (1,) * n
    assert sum(t[lam, identity] ** 2 for lam in t.lambdas) == factorial(n)


@pytest.mark.parametrize("n", range(0, 11))
def test_mn_dimension_matches_hook_length(n):
    for lam in partitions_of(n):
        assert character(lam, (1,) * n) == dimension(lam) == standard_tableaux_count(lam)


@pytest.mark.parametrize("n", range(1, 10))
def test_row_orthogonality(n):
    t = character_table(n)
    sizes = [class_size(mu).size for mu in t.mus]
    for i in range(len(t.lambdas)):
        for j in range(i, len(t.lambdas)):
            inner = sum(s * a * b for s, a, b in zip(sizes, t.values[i], t.values[j]))
            assert inner == (factorial(n) if i == j else 0)


@pytest.mark.parametrize("n", range(1, 10))
def test_conjugation_symmetry(n):
    for lam in partitions_of(n):
        lc = conjugate(lam)
        for mu in partitions_of(n):
            assert character(lc, mu) == (-1) ** (n - len(mu)) * character(lam, mu)


def test_dimension_examples():
    assert dimension((5,)) == 1
    assert dimension((2, 1)) == 2
    assert dimension((2, 2)) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_against_enumeration(n):
    counted = brute_class_sizes(n)
    for mu in partitions_of(n):
        assert class_size(mu).size == counted[mu]
    assert sum(class_size(mu).size for mu in partitions_of(n)) == factorial(n)


def test_class_size_examples():
    assert class_size((1, 1, 1, 1)).size == 1
    assert class_size((5,)).size == 24
    assert class_size((2, 1)).size == 3


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 11).flatmap(
    lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n)))))
def test_memo_agrees_with_plain_recursion(pair):
    lam, mu = pair
    assert character(lam, mu, memo=False) == character(lam, mu)


def test_cold_memo_same_values():
    before = character_table(7).values
    clear_memo()
    assert character_table(7).values == before


def test_parallel_table_is_identical():
    assert character_table(8, jobs=4).values == character_table(8).values


def test_exports():
    t = character_table(3)
    assert t.to_csv().splitlines() == [
        'lambda\\mu,3,"2,1","1,1,1"',
        "3,1,1,1",
        '"2,1",-1,0,2',
        '"1,1,1",1,-1,1',
    ]
    data = json.loads(t.to_json())
    assert data == {"n": 3, "lambdas": [[3], [2, 1], [1, 1, 1]], "mus": [[3], [2, 1], [1, 1, 1]],
                    "values": [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]}
    assert CharacterTable.from_dict(data) == t
    assert "\\begin{tabular}" in t.to_latex()
    assert t.to_plain().count("\n") == 4


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "chars.json"
    cache = CharacterCache(path)
    t5 = character_table(5, cache)
    cache.save()
    raw = json.loads(path.read_text())
    assert raw["version"] == 1 and "5" in raw["tables"]
    warm = CharacterCache(path)
    assert 5 in warm and warm.get(5) == t5
    assert character_table(5, warm) is warm.get(5)


def test_cache_ignores_unknown_fields(tmp_path):
    path = tmp_path / "chars.json"
    data = {"version": 1, "extra": "ignored",
            "tables": {"2": {"n": 2, "lambdas": [[2], [1, 1]], "mus": [[2], [1, 1]],
                             "values": [[1, 1], [1, -1]], "note": "x"}}}
    path.write_text(json.dumps(data))
    assert CharacterCache(path).get(2).values == [[1, 1], [1, -1]]


def test_cache_newer_version_left_alone(tmp_path):
    path = tmp_path / "chars.json"
    path.write_text(json.dumps({"version": 99, "tables": {}}))
    cache = CharacterCache(path)
    assert cache.readonly and len(cache) == 0
    character_table(3, cache)
    cache.save()
    assert json.loads(path.read_text())["version"] == 99


def test_cache_clear(tmp_path):
    path = tmp_path / "chars.json"
    cache = CharacterCache(path)
    character_table(4, cache)
    cache.save()
    cache.clear()
    assert not path.exists() and len(cache) == 0


def test_random_sample_integral():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 12)
        lam = rng.choice(partitions_of(n))
        mu = rng.choice(partitions_of(n))
        assert isinstance(character(lam, mu), int)
