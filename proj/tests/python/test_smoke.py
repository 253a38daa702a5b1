"""Smoke tests for the python bindings: classification, small solves, the
splitting, and JSON interchange with the CLI formats."""

import json

import pytest

import cohomsl2 as ch


def test_classify_and_parameters():
    p = ch.classify(0.25, 0)
    assert p.series == ch.Series.FirstPrincipal
    assert p.nu == 0
    assert p.i_nu == 0

    d = ch.classify(-2.0, 0)
    assert d.series == ch.Series.FirstDiscrete
    assert d.n == 2 and d.i_nu == 2


def test_classify_errors():
    with pytest.raises(ch.CohomError):
        ch.classify(0.1875, 1)
    with pytest.raises(ch.CohomError):
        ch.classify(0.0, 0)  # ambiguous without a hint
    p = ch.classify(0.0, 0, ch.Series.FirstDiscrete)
    assert p.n == 1


def test_scalar_values():
    comp = ch.complementary(0.1875)
    assert abs(ch.pi_product(comp, 1) - 1 / 3) < 1e-14
    assert abs(ch.basis_norm_sq(comp, -1) - 1 / 3) < 1e-14
    fp = ch.first_principal(0.25)
    assert abs(ch.beta(fp, 1) - 1 / 3) < 1e-14
    assert abs(ch.d_value(fp, 0, 4) - 5 / 21) < 1e-14
    assert ch.sobolev_index(2.0, 3) == pytest.approx(24.0)


def test_discrete_solve_roundtrip():
    fd2 = ch.first_discrete(2)
    f = ch.CoeffTensor([fd2], [(2, 12)])
    coeffs = list(f.coeffs)
    coeffs[1] = 2.0 + 0.0j  # 2 * u_3
    f = ch.CoeffTensor([fd2], [(2, 12)], coeffs)
    g = ch.solve_1d(f)
    assert abs(g.at([2]) - 1.0) < 1e-12
    assert ch.difference_rhs_check(fd2, g, f) < 1e-12


def test_apply_x_and_kernel():
    fp = ch.first_principal(0.25)
    h = ch.CoeffTensor([fp], [(-4, 4)], [0] * 4 + [1.0 + 0j] + [0] * 4)
    xh = ch.apply_X(h, 1)
    assert abs(xh.at([1]) - 0.25) < 1e-15
    assert abs(xh.at([-1]) - 0.25) < 1e-15
    defects = ch.kernel_defect(xh)
    assert max(abs(z) for z in defects) < 1e-12


def test_split_and_top_solver():
    factors = [ch.first_principal(0.5), ch.complementary(0.24)]
    h = ch.CoeffTensor(factors, [(-5, 5), (-5, 5)])
    coeffs = [0j] * len(h.coeffs)
    coeffs[len(coeffs) // 2] = 1.0 + 0j
    h = ch.CoeffTensor(factors, [(-5, 5), (-5, 5)], coeffs)
    f = ch.apply_X(h, 1) + ch.apply_X(h, 2)

    f1, fmu = ch.split(f, 0.5)
    ok, worst_f1, worst_fmu = ch.verify_split_kernels(f1, fmu, 1e-8)
    assert ok and max(worst_f1, worst_fmu) < 1e-8 * ch.norm0(f)

    gs = ch.solve_top(f)
    assert ch.residual(f, gs) < 1e-8 * ch.norm0(f)


def test_json_roundtrip():
    fp = ch.first_principal(0.25)
    f = ch.CoeffTensor([fp], [(-2, 2)], [1j, 0j, 0.5 + 0j, 0j, -1 / 3 + 0j])
    text = f.to_json()
    parsed = json.loads(text)
    assert parsed["factors"][0]["series"] == "first_principal"
    back = ch.CoeffTensor.from_json(text)
    assert back.to_json() == text


def test_lemma_suite():
    rep = ch.verify_lemma("logA.4")
    assert rep["pass"]
    assert "lemma3.1" in ch.lemma_suites()
