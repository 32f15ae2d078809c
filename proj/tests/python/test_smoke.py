"""End-to-end smoke tests for the Python bindings."""

import math

import pytest

import parityproj as pp

ALIST_84 = """8 4
3 4
3 3 3 3 1 1 1 1
4 4 4 4
2 3 4
1 3 4
1 2 4
1 2 3
1 0 0
2 0 0
3 0 0
4 0 0
2 3 4 5
1 3 4 6
1 2 4 7
1 2 3 8
"""


def test_version_string():
    assert isinstance(pp.__version__, str) and pp.__version__


def test_clamp_and_cut_search():
    assert pp.clamp_unit_box([-0.5, 0.25, 2.0]) == [0.0, 0.25, 1.0]
    theta, p = pp.cut_search([0.5, 1.0, 2.75], kind="even")
    assert list(theta) == [1, 1, 1] and p == 2


def test_project_worked_example():
    res = pp.project([0.5, 1.0, 2.75], kind="even")
    assert res["z"] == pytest.approx([0.25, 0.75, 1.0], abs=1e-15)
    assert res["iterations"] == 2
    assert list(res["fixes_per_iteration"]) == [1]
    assert list(res["permutation"]) == [2, 1, 0]
    assert res["terminated_by"] == "face-interior"


def test_projections_agree():
    x = [0.5, 1.0, 2.75, -0.3, 0.9]
    ref = pp.oracle_project(x, kind="odd")
    for z in (
        pp.project(x, kind="odd")["z"],
        pp.project_zhang_siegel(x, kind="odd"),
        pp.project_wasson_draper(x, kind="odd"),
    ):
        assert z == pytest.approx(ref, abs=1e-9)
    assert pp.is_member(ref, kind="odd", tol=1e-9)


def test_counted_projection_has_no_multiplications():
    res = pp.project_counted([0.5, 1.0, 2.75], kind="even", algorithm="fix")
    assert res["multiplications"] == 0
    assert res["divisions"] == res["iterations"] == 2
    zs = pp.project_counted([0.5, 1.0, 2.75], algorithm="zs")
    assert zs["divisions"] == 1 and zs["z"] == pytest.approx(res["z"], abs=1e-9)


def test_capped_simplex():
    w = pp.oracle_project_capped_simplex([0.9, 0.5, 0.1], 2.0)
    assert w == pytest.approx([1.0, 0.7, 0.3], abs=1e-12)
    assert math.isclose(sum(w), 2.0, abs_tol=1e-12)


def test_alist_round_trip_and_errors():
    h = pp.parse_alist(ALIST_84)
    assert h.n == 8 and h.m == 4
    assert h.rows[0] == [1, 2, 3, 4]
    assert pp.parse_alist(h.to_alist()).to_alist() == h.to_alist()
    assert h.syndrome_ok([0] * 8)
    assert h.syndrome_ok([1, 1, 0, 0, 1, 1, 0, 0])
    assert not h.syndrome_ok([1] + [0] * 7)
    with pytest.raises(ValueError):
        pp.parse_alist("not an alist")


def test_decode_noiseless():
    h = pp.parse_alist(ALIST_84)
    llr = pp.awgn_llr([1.0] * 8, 0.5)
    res = pp.decode(llr, h)
    assert res["status"] == "converged-integral"
    assert res["hard_decision"] == [0] * 8
    assert res["iterations"] <= 50
    flipped = pp.awgn_llr([-1.0, -1.0, 1.0, 1.0, -1.0, -1.0, 1.0, 1.0], 0.5)
    res = pp.decode(flipped, h, projector="oracle")
    assert res["hard_decision"] == [1, 1, 0, 0, 1, 1, 0, 0]


def test_matrix_constructor_matches_alist():
    h = pp.ParityCheckMatrix(8, 4, [[1, 2, 3, 4], [0, 2, 3, 5], [0, 1, 3, 6], [0, 1, 2, 7]])
    assert h.to_alist() == pp.parse_alist(ALIST_84).to_alist()
    assert h.max_row_degree() == 4 and h.max_col_degree() == 3


def test_bench_csv():
    csv = pp.bench_ops_csv(degree_min=2, degree_max=4, trials=200, seed=7, workers=2)
    lines = csv.strip().splitlines()
    assert lines[0] == "d,algorithm,mean_low_ops,mean_mults,mean_divs,hard_case_fraction,mean_iterations"
    assert len(lines) == 1 + 3 * 3
    again = pp.bench_ops_csv(degree_min=2, degree_max=4, trials=200, seed=7, workers=5)
    assert again == csv
    prob = pp.bench_probability_csv(degree_min=2, degree_max=4, input_half_range=1.0, trials=200, seed=7)
    assert len(prob.strip().splitlines()) == 1 + 3
    with pytest.raises(ValueError):
        pp.bench_ops_csv(degree_min=1, degree_max=4, trials=200)
