import pytest
from hypothesis import given

from nakayama import NotCyclic, cyclic, linear, structure_sets
from nakayama.structure import (
    base_lengths_by_kupisch,
    base_set,
    defect,
    defect_by_kupisch,
    defect_by_quotients,
    defect_of_projective,
    defect_vector,
    filtered_projectives,
    is_selfinjective,
    minimal_injectives,
    minimal_projectives,
    projective_injectives,
    socle_set,
    top_set,
)

from conftest import cyclic_series

WORKED = cyclic(2, 4, 3, 3, 3, 4, 3, 2, 2)


class TestDefects:
    def test_linear_path(self):
        assert defect_of_projective(linear(3, 2, 1), 1) == 2

    def test_selfinjective(self):
        assert defect_vector(cyclic(3, 3, 3)) == (0, 0, 0)
        assert is_selfinjective(cyclic(3, 3, 3))

    def test_worked_total(self):
        assert defect(WORKED) == 3

    def test_disconnected_indices(self):
        assert defect_vector(linear(2, 2, 1, 3, 2, 1)) == (1, 0, 0, 2, 0, 0)

    @given(cyclic_series())
    def test_routes_agree(self, s):
        for i in range(1, s.rank + 1):
            assert defect_by_quotients(s, i) == defect_by_kupisch(s.entries, i)


class TestBaseSet:
    def test_three_two_two(self):
        b = base_set(cyclic(3, 2, 2))
        assert sorted((m.top, m.length) for m in b) == [(1, 1), (2, 2)]

    def test_worked_lengths(self):
        assert sorted(m.length for m in base_set(WORKED)) == [1, 1, 1, 1, 2, 3]
        assert sum(m.length for m in base_set(WORKED)) == WORKED.rank

    def test_selfinjective_all_simple(self):
        assert all(m.length == 1 for m in base_set(cyclic(4, 4, 4)))

    @given(cyclic_series())
    def test_kupisch_route(self, s):
        assert sorted(m.length for m in base_set(s)) == sorted(base_lengths_by_kupisch(s))


class TestFilteredAndMinimal:
    def test_filtered_three_two_two(self):
        assert filtered_projectives(cyclic(3, 2, 2)) == [1, 2]
        assert socle_set(cyclic(3, 2, 2)) == [1, 3]

    def test_filtered_worked(self):
        assert filtered_projectives(WORKED) == [1, 2, 3, 6, 7, 8]

    def test_filtered_selfinjective(self):
        assert filtered_projectives(cyclic(3, 3)) == [1, 2]

    def test_minimal_projectives(self):
        assert minimal_projectives(cyclic(3, 2, 2)) == [2, 3]
        assert minimal_projectives(cyclic(4, 3, 3)) == [2, 3]

    def test_selfinjective_minimal(self):
        s = cyclic(3, 3, 3)
        assert minimal_projectives(s) == [1, 2, 3]
        assert projective_injectives(s) == [1, 2, 3]

    def test_linear_rejected(self):
        with pytest.raises(NotCyclic):
            socle_set(linear(2, 1))


class TestStructureSets:
    def test_worked(self):
        ss = structure_sets(WORKED)
        assert ss.num_relations == 6
        assert ss.defect_total == 3
        d = ss.to_dict()
        assert d["defect"] == 3 and d["num_relations"] == 6

    def test_linear_input(self):
        ss = structure_sets(linear(2, 2, 1, 3, 2, 1))
        assert ss.socle_set == () and ss.defect_total == 3

    @given(cyclic_series())
    def test_counting_identities(self, s):
        ss = structure_sets(s)
        sizes = {len(ss.socle_set), len(ss.top_set), len(ss.base_set), ss.num_relations,
                 len(ss.minimal_projectives), len(minimal_injectives(s))}
        assert len(sizes) == 1
        assert s.rank == ss.num_relations + ss.defect_total
        covered = sorted(s.index(v) for b in ss.base_set for v in b.factors())
        assert covered == list(range(1, s.rank + 1))
        assert top_set(s) == sorted(s.index(x + 1) for x in socle_set(s))
        assert sorted(s.index(t - 1) for t in projective_injectives(s)) == list(ss.minimal_projectives)
