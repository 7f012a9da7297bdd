import pytest

from nakayama import KupischSeries, cyclic, enumerate_admissible, iso_key, linear, universe
from nakayama.enumerate import brute_force_classes, exhaustive_fiber, fiber_entry_bound
from nakayama.kupisch import KupischError, canonical_form


def test_rank_two():
    assert [s.entries for s in enumerate_admissible(2, 3)] == [(2, 2), (2, 3), (3, 3)]


def test_rank_one():
    assert [s.entries for s in enumerate_admissible(1, 3)] == [(2,), (3,)]
    assert [s.entries for s in enumerate_admissible(1, 3, kind="linear")] == [(1,)]


def test_rank_zero_is_empty():
    assert list(enumerate_admissible(0, 5)) == []


def test_unknown_kind():
    with pytest.raises(KupischError):
        list(enumerate_admissible(2, 3, kind="tree"))


@pytest.mark.parametrize("kind", ["cyclic", "linear"])
@pytest.mark.parametrize("rank", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("max_entry", [3, 5])
def test_matches_filter_all_tuples(kind, rank, max_entry):
    out = list(enumerate_admissible(rank, max_entry, kind))
    keys = [iso_key(s) for s in out]
    assert len(keys) == len(set(keys))
    assert set(keys) == brute_force_classes(rank, max_entry, kind)


def test_output_is_admissible_and_bounded():
    for s in enumerate_admissible(6, 6):
        KupischSeries(s.kind, s.entries)
        assert max(s.entries) <= 6
        assert s.entries[0] == min(s.entries)


def test_linear_output_is_canonical():
    for s in enumerate_admissible(5, 4, kind="linear"):
        assert canonical_form(s) == s


def test_first_entry_shards_partition():
    full = list(enumerate_admissible(5, 6))
    sharded = [s for f in range(2, 7) for s in enumerate_admissible(5, 6, first=f)]
    assert full == sharded


def test_universe_size_and_order():
    u = universe(4, 5)
    assert len(u) == sum(len(list(enumerate_admissible(n, 5))) for n in range(1, 5))
    assert [s.rank for s in u] == sorted(s.rank for s in u)


def test_fiber_entry_bound_covers_worked_example():
    assert fiber_entry_bound(linear(2, 2, 1, 3, 2, 1), 3) >= 4


def test_exhaustive_fiber_of_worked_example():
    fiber = exhaustive_fiber(linear(2, 2, 1, 3, 2, 1), 3)
    assert [iso_key(s) for s in fiber] == [iso_key(cyclic(2, 4, 3, 3, 3, 4, 3, 2, 2))]
