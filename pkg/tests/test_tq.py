from fractions import Fraction

import pytest

from asm3 import tq
from asm3.errors import DegenerateParameters, PoleAtSample
from asm3.laurent import LaurentPoly
from asm3.report import all_passed, failures
from asm3.tq import (
    c_norm,
    e_poly,
    f_poly,
    fg_2f1_check,
    g_poly,
    gauss_relation_checks,
    h_poly,
    ode_check_f,
    ode_check_h,
    p_poly,
    p_poly_phi,
    phi,
    q_poly,
    q_poly_phi,
    tq_check,
    tq_family,
    transform_checks,
    v_poly,
    v_poly_phi,
    v_poly_q,
)

F = Fraction
SAMPLES = (F(2), F(3), F(5, 7))


def test_first_families_literal():
    assert f_poly(0) == LaurentPoly({1: 1, -1: -1})
    assert f_poly(1) == LaurentPoly(
        {4: F(2, 3), 2: F(-4, 3), -2: F(4, 3), -4: F(-2, 3)}
    )
    assert g_poly(0) == LaurentPoly({2: 1, -2: -1})
    assert g_poly(1) == LaurentPoly(
        {5: F(1, 3), 1: F(-5, 3), -1: F(5, 3), -5: F(-1, 3)}
    )
    assert h_poly(0) == LaurentPoly({2: 1, 1: 2, -1: -2, -2: -1})


def test_normalization_constants():
    assert c_norm(0) == 1
    assert c_norm(1) == F(6, 5)


def test_family_supports_are_arithmetic():
    for m in range(6):
        f_exps = {3 * m + 1 - 6 * k for k in range(m + 1)}
        assert f_poly(m).support == tuple(sorted(f_exps | {-e for e in f_exps}))
        g_exps = {3 * m + 2 - 6 * k for k in range(m + 1)}
        assert g_poly(m).support == tuple(sorted(g_exps | {-e for e in g_exps}))


def test_families_are_odd():
    for m in range(6):
        assert f_poly(m).invert_x() == -f_poly(m)
        assert g_poly(m).invert_x() == -g_poly(m)


def test_shift_equation_on_monomials():
    # x^k solves iff k is not divisible by 3
    for k in range(-6, 7):
        assert tq_check(LaurentPoly({k: 1})) == (k % 3 != 0)


def test_families_solve_shift_equation():
    for m in range(8):
        fam = tq_family(m)
        assert tq_check(fam.f)
        assert tq_check(fam.g)
        assert tq_check(fam.h)


def test_h_vanishes_at_one_and_f_does_not():
    for m in range(8):
        assert h_poly(m).eval_at(1) == 0
        assert f_poly(m).eval_at(1) == 0  # odd in x -> 1/x
        assert q_poly(m).eval_at(1) != 0


def test_quotients_literal():
    u = {1: 1, -1: 1}
    assert q_poly(0) == LaurentPoly({0: 1})
    assert q_poly(1) == LaurentPoly({1: F(2, 3), -1: F(2, 3)})
    assert q_poly(2) == LaurentPoly({2: F(5, 9), 0: F(11, 9), -2: F(5, 9)})
    assert p_poly(0) == LaurentPoly(u)
    assert p_poly(1) == LaurentPoly({2: F(1, 3), 0: 1, -2: F(1, 3)})
    assert v_poly(0) == LaurentPoly({0: 1})
    assert v_poly(1) == LaurentPoly({1: F(2, 5), 0: F(1, 5), -1: F(2, 5)})


def test_quotients_are_symmetric_and_rational():
    for m in range(6):
        for p in (q_poly(m), p_poly(m), v_poly(m)):
            assert p.invert_x() == p
            assert p.is_rational


def test_v_is_one_at_one():
    for m in range(8):
        assert v_poly(m).eval_at(1) == 1


def test_phi_values():
    assert phi(0, 0).value == LaurentPoly({0: 1})
    assert phi(2, 0).value == LaurentPoly({2: F(2, 3), 0: F(5, 3), -2: F(2, 3)})
    assert phi(2, 1).value == LaurentPoly({2: F(7, 9), 0: F(16, 9), -2: F(7, 9)})


def test_phi_structural_invariants():
    for m in range(6):
        for k in range(4):
            val = phi(m, k).value
            assert val.invert_x() == val
            assert val.is_rational
            if not val.is_zero:
                assert val.max_exp <= m
                assert all(e % 2 == m % 2 for e in val.support)


def test_phi_degenerate_case_raises():
    with pytest.raises(DegenerateParameters):
        phi(1, -1)
    with pytest.raises(DegenerateParameters):
        p_poly_phi(0)


def test_division_route_survives_where_series_route_degenerates():
    assert p_poly(0) == LaurentPoly({1: 1, -1: 1})


def test_dual_routes_agree():
    for m in range(6):
        assert q_poly(m) == q_poly_phi(m)
        assert v_poly(m) == v_poly_q(m)
        assert v_poly(m) == v_poly_phi(m)
    for m in range(1, 6):
        assert p_poly(m) == p_poly_phi(m)


def test_e_poly_literal():
    assert tuple(e_poly(0).coeffs) == (F(1),)
    assert tuple(e_poly(1).coeffs) == (F(1, 5), F(3, 5), F(1, 5))
    assert tuple(e_poly(2).coeffs) == (
        F(5, 126),
        F(5, 21),
        F(4, 9),
        F(5, 21),
        F(5, 126),
    )


def test_e_poly_shape():
    for m in range(8):
        e = e_poly(m)
        assert e.degree == 2 * m
        assert e.is_palindromic()
        assert e.eval_at(F(1)) == 1


def test_differential_equations():
    for m in range(8):
        assert ode_check_f(m)
        assert ode_check_h(m)


def test_series_forms_of_f_and_g():
    for m in range(8):
        assert fg_2f1_check(m)


def test_relation_suite_passes():
    res = []
    for m in range(5):
        res.extend(gauss_relation_checks(m))
    assert all_passed(res), failures(res)


def test_relation_suite_names_are_stable():
    names = {r.name for r in gauss_relation_checks(2)}
    assert names == {
        "g_from_f_pair",
        "h_from_f_pair",
        "p_from_q_pair",
        "v_from_q_pair",
        "q_routes_agree",
        "p_routes_agree",
        "v_routes_agree",
        "phi_step_order",
        "phi_step_shift",
    }


def test_transform_checks_pass_at_rational_samples():
    for m in range(5):
        res = transform_checks(m, SAMPLES)
        assert all_passed(res), failures(res)
        assert len(res) == 2 * len(SAMPLES)


def test_transform_rejects_zero_sample():
    with pytest.raises(PoleAtSample):
        transform_checks(1, (F(0),))


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        f_poly(-1)
    with pytest.raises(ValueError):
        e_poly(-1)
    with pytest.raises(ValueError):
        phi(-1, 0)
    with pytest.raises(ValueError):
        gauss_relation_checks(-1)
