"""Cohomology dims: three routes, closed forms, and the nonvanishing run."""

import pytest

from twistlab.fields import GF, QQ
from twistlab.algebra import standard_algebra
from twistlab.quivers import (
    Quiver,
    longest_path_length,
    path_algebra_acyclic,
    standard_quiver,
    truncated_path_algebra,
)
from twistlab.hochschild import (
    CROWN_READING,
    HH_ERRATA,
    HHProfile,
    READING_NOTES,
    crown_formula,
    hh_bar,
    hh_e_complex,
    hh_rsz,
    rsz_coboundary,
    rsz_layer,
    thm_formula,
    verify_counterexample,
)

TWO_LOOPS = Quiver(1, [(0, 0), (0, 0)])
L3 = Quiver(3, [(0, 1), (1, 2)])
ONE_ARROW = Quiver(2, [(0, 1)])


def test_rsz_roundtrip_all_ones():
    prof = hh_rsz(standard_quiver("roundtrip"), QQ, 10)
    assert prof.dims == [1] * 11
    assert prof.method == "rsz-complex"
    assert hh_rsz(standard_quiver("roundtrip"), GF(5), 6).dims == [1] * 7


def test_rsz_qtilde():
    assert hh_rsz(standard_quiver("qtilde"), QQ, 5).dims == [2, 0, 0, 0, 0, 0]


def test_rsz_four_points():
    assert hh_rsz(standard_quiver("four_points"), QQ, 3).dims == [4, 0, 0, 0]


def test_rsz_loop_char0_and_char2():
    assert hh_rsz(standard_quiver("loop"), QQ, 6).dims == [2, 1, 1, 1, 1, 1, 1]
    assert hh_rsz(standard_quiver("loop"), GF(2), 4).dims == [2, 2, 2, 2, 2]


def test_rsz_kronecker():
    assert hh_rsz(standard_quiver("kronecker"), QQ, 4).dims == [1, 3, 0, 0, 0]


def test_rsz_crown3():
    assert hh_rsz(standard_quiver("crown(3)"), QQ, 9).dims == [
        1, 1, 0, 0, 0, 0, 1, 1, 0, 0,
    ]


def test_rsz_two_loops():
    assert hh_rsz(TWO_LOOPS, QQ, 4).dims == [3, 4, 6, 12, 24]


def test_rsz_degree_bound():
    with pytest.raises(ValueError):
        hh_rsz(standard_quiver("loop"), QQ, 33)
    assert hh_rsz(standard_quiver("four_points"), QQ, 0).dims == [4]


def test_rsz_layer_shapes_and_square_zero():
    q = standard_quiver("roundtrip")
    layers = [rsz_layer(q, QQ, n) for n in range(6)]
    for n, layer in enumerate(layers):
        expect_p0 = 2 if n % 2 == 0 else 0
        expect_p1 = 0 if n % 2 == 0 else 2
        assert len(layer.basis_p0) == expect_p0
        assert len(layer.basis_p1) == expect_p1
        assert layer.d_matrix.cols == expect_p0
    for n in range(4):
        a = rsz_coboundary(layers[n], layers[n + 1])
        b = rsz_coboundary(layers[n + 1], layers[n + 2])
        assert (b * a).is_zero()


def test_bar_matrix2_and_k4():
    assert hh_bar(standard_algebra("matrix2", QQ), 3).dims == [1, 0, 0, 0]
    assert hh_bar(standard_algebra("k_n", QQ, n=4), 3).dims == [4, 0, 0, 0]


def test_bar_truncated_roundtrip_to_degree_4():
    alg = standard_algebra("truncated_roundtrip", QQ)
    assert hh_bar(alg, 4).dims == [1, 1, 1, 1, 1]


def test_bar_qtilde_reference_presentation():
    alg = standard_algebra("qtilde_path_algebra", QQ)
    assert hh_bar(alg, 3).dims == [2, 0, 0, 0]


def test_bar_a_q_presentations():
    assert hh_bar(standard_algebra("a_q", QQ, q=0), 3).dims == [1, 0, 0, 0]
    assert hh_bar(standard_algebra("a_q", QQ, q=1), 3).dims == [1, 0, 0, 0]
    assert hh_bar(standard_algebra("a_q", QQ, q=2), 3).dims == [1, 1, 1, 1]


def test_bar_budget_guard(monkeypatch):
    alg = standard_algebra("k_n", QQ, n=4)
    with pytest.raises(ValueError):
        hh_bar(alg, 5)
    monkeypatch.setenv("TWISTLAB_BUDGET", "100")
    hh_bar(alg, 1)
    with pytest.raises(ValueError):
        hh_bar(alg, 2)
    monkeypatch.setenv("TWISTLAB_BUDGET", "300")
    assert hh_bar(alg, 2).dims == [4, 0, 0]


def test_e_complex_truncated_roundtrip():
    alg = standard_algebra("truncated_roundtrip", QQ)
    idems = [alg.basis_element(0), alg.basis_element(1)]
    assert hh_e_complex(alg, idems, 6).dims == [1] * 7
    alg3 = standard_algebra("truncated_roundtrip", GF(3))
    idems3 = [alg3.basis_element(0), alg3.basis_element(1)]
    assert hh_e_complex(alg3, idems3, 4).dims == [1] * 5


def test_e_complex_qtilde():
    alg = standard_algebra("qtilde_path_algebra", QQ)
    idems = [alg.basis_element(i) for i in range(3)]
    assert hh_e_complex(alg, idems, 3).dims == [2, 0, 0, 0]


def test_e_complex_k4_collapses():
    alg = standard_algebra("k_n", QQ, n=4)
    idems = [alg.basis_element(i) for i in range(4)]
    assert hh_e_complex(alg, idems, 2).dims == [4, 0, 0]


def test_e_complex_hypothesis_errors():
    alg = standard_algebra("truncated_roundtrip", QQ)
    e, f = alg.basis_element(0), alg.basis_element(1)
    with pytest.raises(ValueError):
        hh_e_complex(alg, [e.algebra.unit_element(), e], 2)
    with pytest.raises(ValueError):
        hh_e_complex(alg, [e], 2)
    x = alg.basis_element(2)
    with pytest.raises(ValueError):
        hh_e_complex(alg, [e, f, x], 2)
    cubic = path_algebra_acyclic(L3, QQ)
    idems = [cubic.basis_element(i) for i in range(3)]
    with pytest.raises(ValueError):
        hh_e_complex(cubic, idems, 2)


def corpus():
    quivers = [
        standard_quiver("roundtrip"),
        standard_quiver("qtilde"),
        standard_quiver("four_points"),
        standard_quiver("loop"),
        standard_quiver("kronecker"),
        standard_quiver("crown(3)"),
        TWO_LOOPS,
    ]
    return quivers


def test_three_methods_agree_on_corpus():
    for q in corpus():
        rsz = hh_rsz(q, QQ, 4).dims
        alg = truncated_path_algebra(q, QQ)
        idems = [alg.basis_element(v) for v in range(q.vertex_count)]
        assert hh_e_complex(alg, idems, 4).dims == rsz
        n_bar = 4
        while alg.dim ** (n_bar + 2) > 4096:
            n_bar -= 1
        assert hh_bar(alg, n_bar).dims == rsz[: n_bar + 1]


def test_methods_agree_over_f5():
    for name in ("roundtrip", "qtilde", "loop"):
        q = standard_quiver(name)
        f = GF(5)
        rsz = hh_rsz(q, f, 3).dims
        alg = truncated_path_algebra(q, f)
        idems = [alg.basis_element(v) for v in range(q.vertex_count)]
        assert hh_e_complex(alg, idems, 3).dims == rsz
        assert hh_bar(alg, 3).dims == rsz


def test_thm_formula_values_and_hypotheses():
    kron = standard_quiver("kronecker")
    assert thm_formula(kron, 0) == 1
    assert thm_formula(kron, 1) == 3
    assert thm_formula(kron, 2) == 0
    assert thm_formula(standard_quiver("roundtrip"), 0) is None
    assert thm_formula(standard_quiver("loop"), 0) is None
    assert thm_formula(standard_quiver("four_points"), 0) is None
    assert thm_formula(standard_quiver("qtilde"), 0) is None
    with pytest.raises(ValueError):
        thm_formula(kron, -1)


def test_thm_formula_matches_rsz_on_connected_non_crowns():
    for q in (standard_quiver("kronecker"), TWO_LOOPS, L3, ONE_ARROW):
        dims = hh_rsz(q, QQ, 6).dims
        for n in range(7):
            assert thm_formula(q, n) == dims[n]


def test_crown_formula_readings():
    assert [crown_formula(2, n) for n in range(13)] == [1] * 13
    assert [crown_formula(3, n) for n in range(10)] == [
        1, 1, 0, 0, 0, 0, 1, 1, 0, 0,
    ]
    assert crown_formula(3, 2) == 0
    assert [crown_formula(4, n) for n in range(10)] == [
        1, 1, 0, 0, 1, 1, 0, 0, 1, 1,
    ]
    assert "even" in CROWN_READING
    with pytest.raises(ValueError):
        crown_formula(1, 0)
    with pytest.raises(ValueError):
        crown_formula(3, 0, characteristic=2)


def test_crown_formula_matches_rsz():
    assert [crown_formula(2, n) for n in range(13)] == hh_rsz(
        standard_quiver("roundtrip"), QQ, 12
    ).dims
    assert [crown_formula(3, n) for n in range(10)] == hh_rsz(
        standard_quiver("crown(3)"), QQ, 9
    ).dims
    assert [crown_formula(4, n) for n in range(10)] == hh_rsz(
        standard_quiver("crown(4)"), QQ, 9
    ).dims


def test_acyclic_vanishing_and_cyclic_persistence():
    for q in (
        standard_quiver("qtilde"),
        standard_quiver("four_points"),
        standard_quiver("kronecker"),
        L3,
        ONE_ARROW,
    ):
        top = longest_path_length(q)
        dims = hh_rsz(q, QQ, top + 3).dims
        assert all(x == 0 for x in dims[top + 1:])
    assert hh_rsz(standard_quiver("roundtrip"), QQ, 12).dims[12] == 1
    crown3 = hh_rsz(standard_quiver("crown(3)"), QQ, 13).dims
    assert crown3[12] == 1 and crown3[13] == 1


def test_counterexample_confirmed_over_q():
    report = verify_counterexample(10)
    assert report["verdict"] == "counterexample confirmed"
    assert report["factor_a_separable"] and report["factor_b_separable"]
    assert report["twist_invertible"]
    assert report["rsz_dims"] == [1] * 11
    assert report["bar_dims"] == [1] * 5
    assert report["product_radical_dims"] == [2, 0]
    assert report["product_center_dim"] == 1


def test_counterexample_minimal_and_finite_field():
    assert verify_counterexample(2)["verdict"] == "counterexample confirmed"
    rep = verify_counterexample(4, GF(5))
    assert rep["verdict"] == "counterexample confirmed"
    assert rep["rsz_dims"] == [1] * 5
    assert rep["bar_dims"] == [1] * 5


def test_counterexample_guards():
    with pytest.raises(ValueError):
        verify_counterexample(1)
    with pytest.raises(ValueError):
        verify_counterexample(4, GF(2))


def test_profile_doc_and_errata():
    prof = HHProfile([1, 2], "bar-complex", "demo")
    assert prof.to_doc() == {
        "algebra_tag": "demo", "method": "bar-complex", "dims": [1, 2],
    }
    assert len(HH_ERRATA) == 1
    assert HH_ERRATA[0]["id"] == "isolated-vertex-hh0"
    assert {n["id"] for n in READING_NOTES} == {
        "semisimple-vanishing-reading",
        "crown-formula-reading",
        "single-loop-exclusion",
    }
