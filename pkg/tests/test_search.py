import pytest

from dcnconn import (
    SearchBudget,
    ShapeSpec,
    certify_min,
    exists_cut_of_size,
    g_extra_connectivity,
    min_structure_cut,
    min_vertex_cut,
    verify_cut,
)
from dcnconn.bcdc import build_bcdc
from dcnconn.dcell import build_dcell
from dcnconn.search import BUDGET, NO, NO_CUT, YES
from dcnconn.shapes import STRUCTURE, SUBSTRUCTURE


class TestExists:
    def test_k5_single_edge_bound1(self, k5):
        res = exists_cut_of_size(k5, ShapeSpec.star(1), STRUCTURE, 1)
        assert res.status == NO
        assert res.copies == 10

    def test_d14_star_bound2_no(self, d14):
        res = exists_cut_of_size(d14, ShapeSpec.star(1), STRUCTURE, 2)
        assert res.status == NO
        assert res.checks == 40 + 780

    def test_d14_star_bound3_yes(self, d14):
        res = exists_cut_of_size(d14, ShapeSpec.star(1), STRUCTURE, 3)
        assert res.status == YES
        assert len(res.witness.members) == 3
        assert verify_cut(d14, res.witness, ShapeSpec.star(1), STRUCTURE).passed

    def test_bound_zero_vacuous(self, b3):
        res = exists_cut_of_size(b3, ShapeSpec.cycle(4), STRUCTURE, 0)
        assert res.status == NO and res.checks == 0

    def test_rejects_disconnected(self):
        from dcnconn import build_graph

        g = build_graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
        with pytest.raises(ValueError, match="connected"):
            exists_cut_of_size(g, ShapeSpec.star(1), STRUCTURE, 1)

    def test_budget_trip_reports_partial(self, b4):
        tiny = SearchBudget(max_members=4, max_candidates=10_000, max_checks=50, time_cap_secs=600)
        res = exists_cut_of_size(b4, ShapeSpec.star(1), STRUCTURE, 4, tiny)
        assert res.status == BUDGET
        assert "cap" in res.note

    def test_candidate_cap_trips(self, b4):
        tiny = SearchBudget(max_members=4, max_candidates=10, max_checks=10**6, time_cap_secs=600)
        res = exists_cut_of_size(b4, ShapeSpec.star(1), STRUCTURE, 2, tiny)
        assert res.status == BUDGET


class TestMinCut:
    def test_k5_star1(self, k5):
        res = min_structure_cut(k5, ShapeSpec.star(1), STRUCTURE)
        assert res.value == 2

    def test_b3_star1(self, b3):
        # two clique edges cover N(u); kappa(B_3)=4 rules out a single edge
        res = min_structure_cut(b3, ShapeSpec.star(1), STRUCTURE)
        assert res.value == 2
        assert verify_cut(b3, res.witness, ShapeSpec.star(1), STRUCTURE).passed

    def test_c6_single(self, c6):
        res = min_structure_cut(c6, ShapeSpec.single(), STRUCTURE)
        assert res.value == 2 == min_vertex_cut(c6)

    def test_no_cut_exists(self, c6):
        # C6 has no triangles, so no clique-3 cut at all
        res = min_structure_cut(c6, ShapeSpec.clique(3), STRUCTURE)
        assert res.status == NO_CUT

    def test_substructure_le_structure(self, d14):
        sub = min_structure_cut(d14, ShapeSpec.star(1), SUBSTRUCTURE).value
        st = min_structure_cut(d14, ShapeSpec.star(1), STRUCTURE).value
        assert sub <= st
        assert sub == st == 3

    def test_jobs_do_not_change_witness(self, b3):
        one = min_structure_cut(b3, ShapeSpec.star(1), STRUCTURE, jobs=1)
        two = min_structure_cut(b3, ShapeSpec.star(1), STRUCTURE, jobs=2)
        assert one.value == two.value
        assert one.witness.members == two.witness.members


class TestFormulaAgreement:
    def test_level0_grid_matches_formula(self):
        # every in-range shape on the complete-graph level
        from dcnconn import predicted_kappa
        from dcnconn.dcell import build_dcell

        for n in (4, 5, 6):
            g = build_dcell(0, n)
            for t in range(1, n - 1):
                for mode in (STRUCTURE, SUBSTRUCTURE):
                    want = predicted_kappa("dcell", {"m": 0, "n": n}, ShapeSpec.star(t), mode).value
                    res = min_structure_cut(g, ShapeSpec.star(t), mode)
                    assert (res.status, res.value) == ("certified", want), (n, t, mode)
            for s in range(3, n):
                want = predicted_kappa("dcell", {"m": 0, "n": n}, ShapeSpec.clique(s), STRUCTURE).value
                res = min_structure_cut(g, ShapeSpec.clique(s), STRUCTURE)
                assert (res.status, res.value) == ("certified", want), (n, s)


class TestCertify:
    def test_certify_d14_star(self, d14):
        from dcnconn import star_cut_dcell

        cut = star_cut_dcell(1, 4, 1)
        res = certify_min(d14, ShapeSpec.star(1), STRUCTURE, 3, witness=cut)
        assert res.status == "certified"
        assert res.lower_bound_proven == 2

    def test_certify_refutes_too_big_value(self, k5):
        res = certify_min(k5, ShapeSpec.star(1), STRUCTURE, 3)
        assert res.status == "refuted"

    def test_certify_wrong_witness_size(self, d14):
        from dcnconn import star_cut_dcell

        cut = star_cut_dcell(1, 4, 1)  # 3 members
        res = certify_min(d14, ShapeSpec.star(1), STRUCTURE, 4, witness=cut)
        assert res.status == "refuted"


class TestGExtra:
    def test_c6(self, c6):
        res = g_extra_connectivity(c6, 0)
        assert res.value == 2

    def test_b3(self, b3):
        res = g_extra_connectivity(b3, 0)
        assert res.value == 4

    def test_c6_h1(self, c6):
        # both components must have >= 2 vertices: still 2 for a 6-cycle
        res = g_extra_connectivity(c6, 1)
        assert res.value == 2

    def test_budget_trip(self, b4):
        tiny = SearchBudget(max_members=8, max_candidates=10**6, max_checks=100, time_cap_secs=600)
        res = g_extra_connectivity(b4, 1, tiny)
        assert res.status == BUDGET
        assert res.value is None
