import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nakayama import (
    ReverseChoice,
    cyclic,
    defect,
    defect_invariant_reverse,
    enumerate_reverses,
    epsilon,
    generate_higher_auslander_gldim3,
    is_isomorphic,
    iso_key,
    linear,
    reverse_fiber,
    weighted_reverse,
)
from nakayama.enumerate import enumerate_admissible, exhaustive_fiber
from nakayama.kupisch import from_components
from nakayama.reverse import (
    ConstructionInadmissible,
    InvalidChoice,
    NoDefectInvariantReverse,
    WeightTooSmall,
    arrangements,
    enumerate_choices,
    kupisch_defects,
    layout,
    weight_vectors,
)

THETA = linear(2, 2, 1, 3, 2, 1)
WORKED = cyclic(2, 4, 3, 3, 3, 4, 3, 2, 2)


class TestDefectInvariant:
    def test_worked_example(self):
        lam = defect_invariant_reverse(THETA)
        assert lam == WORKED
        assert defect(lam) == defect(THETA) == 3

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_cyclic_auslander(self, k):
        assert is_isomorphic(defect_invariant_reverse(cyclic(*([2, 3] * k))), cyclic(*([3, 4, 4] * k)))

    @pytest.mark.parametrize("ns", [[2], [3], [2, 3], [4, 2, 2]])
    def test_sum_of_path_algebras(self, ns):
        theta = from_components([linear(*range(n, 0, -1)) for n in ns])
        assert is_isomorphic(defect_invariant_reverse(theta), generate_higher_auslander_gldim3(ns))

    def test_selfinjective_is_its_own_reverse(self):
        assert defect_invariant_reverse(cyclic(3, 3)) == cyclic(3, 3)

    def test_simple_component_has_none(self):
        with pytest.raises(NoDefectInvariantReverse):
            defect_invariant_reverse(linear(2, 1, 1))

    def test_matches_unique_weighted_choice(self):
        w = kupisch_defects(THETA.entries)
        choices = list(enumerate_choices(THETA, w))
        assert len({iso_key(weighted_reverse(THETA, w, c)) for c in choices}) == 1
        assert [iso_key(s) for s in enumerate_reverses(THETA, w)] == [iso_key(defect_invariant_reverse(THETA))]


class TestLayout:
    def test_worked_positions(self):
        lay = layout(THETA, (1, 0, 0, 2, 0, 0))
        assert lay.filtered_positions == (1, 2, 3, 6, 7, 8)
        assert lay.filtered_entries == (2, 4, 3, 4, 3, 2)
        assert lay.rank == 9

    def test_weight_too_small(self):
        with pytest.raises(WeightTooSmall) as info:
            layout(THETA, (0, 0, 0, 3, 0, 0))
        assert info.value.index == 1

    def test_wrong_length(self):
        with pytest.raises(InvalidChoice):
            layout(THETA, (1, 0, 0))


class TestWeighted:
    W = (1, 1, 0, 3, 0, 0)

    def test_classes_for_weight(self):
        out = enumerate_reverses(THETA, self.W)
        assert len(out) == 8
        for lam in out:
            assert lam.rank == 11
            assert is_isomorphic(epsilon(lam).theta, THETA)
            assert defect(lam) == 5
        assert len({iso_key(s) for s in out}) == 8

    def test_limit(self):
        assert len(enumerate_reverses(THETA, self.W, limit=3)) == 3

    def test_bad_b_positions(self):
        lay = layout(THETA, self.W)
        b = [tuple(range(1, d + 1)) for d in lay.gap_defects]
        b[0] = (5,) * len(b[0]) if b[0] else (5,)
        with pytest.raises(InvalidChoice):
            weighted_reverse(THETA, self.W, ReverseChoice(tuple(b), (0,) * 6))

    def test_bad_a0(self):
        lay = layout(THETA, self.W)
        b = tuple(tuple(range(1, d + 1)) for d in lay.gap_defects)
        with pytest.raises(InvalidChoice):
            weighted_reverse(THETA, self.W, ReverseChoice(b, (0,) * 6, a0=99))

    def test_a0_rotates(self):
        lay = layout(THETA, self.W)
        b = tuple(tuple(range(1, d + 1)) for d in lay.gap_defects)
        base = weighted_reverse(THETA, self.W, ReverseChoice(b, (0,) * 6))
        for a0 in range(lay.gap_sizes[-1] + 1):
            assert is_isomorphic(weighted_reverse(THETA, self.W, ReverseChoice(b, (0,) * 6, a0)), base)

    def test_simple_component_filtered_length(self):
        with pytest.raises(InvalidChoice):
            weighted_reverse(linear(1, 2, 1), (1, 1, 0))

    def test_internal_error_type(self):
        assert issubclass(ConstructionInadmissible, AssertionError)

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_random_weights(self, data):
        theta = data.draw(st.sampled_from([THETA, linear(3, 2, 1), cyclic(2, 3), cyclic(3, 3, 4),
                                           linear(2, 3, 2, 1), from_components([[2, 1], [2, 1]])]))
        floor = kupisch_defects(theta.entries)
        extra = data.draw(st.lists(st.integers(0, 2), min_size=theta.rank, max_size=theta.rank))
        w = tuple(f + e for f, e in zip(floor, extra))
        for lam in enumerate_reverses(theta, w, limit=20):
            assert is_isomorphic(epsilon(lam).theta, theta)
            assert defect(lam) == sum(w)
            assert lam.rank == theta.rank + sum(w)


class TestFibers:
    def test_weight_vectors(self):
        vs = list(weight_vectors((1, 0, 2), 4))
        assert len(vs) == 3 and all(sum(v) == 4 for v in vs)
        assert list(weight_vectors((3,), 2)) == []

    def test_arrangements(self):
        assert len(arrangements(from_components([[2, 1], [3, 2, 1], [2, 2, 1]]))) == 2
        assert arrangements(cyclic(2, 3)) == [cyclic(2, 3)]

    def test_construction_reaches_every_member(self):
        thetas = [theta for n in range(1, 5) for kind in ("cyclic", "linear")
                  for theta in enumerate_admissible(n, 4, kind)]
        checked = 0
        for theta in thetas:
            d0 = defect(theta)
            for d in range(d0, d0 + 3):
                built = {iso_key(s) for s in reverse_fiber(theta, d)}
                found = {iso_key(s) for s in exhaustive_fiber(theta, d)}
                assert built == found, (theta, d)
                checked += 1
        assert checked > 40
