import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kippenhahn import (DegenerateInput, ReciprocalParams, UniPoly, a_params,
                        build_reciprocal, cubic_roots, divide_by_linear,
                        eval_residual, generating_poly, params_to_matrix,
                        reduce_mod_cubic, resultant_in_z)
from kippenhahn import rtables
from kippenhahn.nrpoly import substitution_tau_coeffs

F = Fraction


def frac_params(n, rng):
    return ReciprocalParams(
        A=tuple(F(rng.randint(1, 40), rng.randint(1, 9)) + 1 for _ in range(n - 1)))


def test_generating_poly_n3():
    P = generating_poly(ReciprocalParams(A=(F(2), F(3))))
    # zeta - (A1 + A2)/2 - tau
    assert P.coeff(1, 0) == 1
    assert P.coeff(0, 0) == F(-5, 2)
    assert P.coeff(0, 1) == -1
    assert P.origin_component


def test_generating_poly_n4_closed_form():
    rng = random.Random(0)
    for _ in range(5):
        p = frac_params(4, rng)
        A1, A2, A3 = p.A
        P = generating_poly(p)
        assert P.coeff(2, 0) == 1
        assert P.coeff(1, 1) == F(-3, 2)
        assert P.coeff(1, 0) == -(A1 + A2 + A3) / 2
        assert P.coeff(0, 2) == F(1, 4)
        assert P.coeff(0, 1) == (A1 + A3) / 4
        assert P.coeff(0, 0) == A1 * A3 / 4
        assert not P.origin_component


def test_generating_poly_n6_closed_form():
    rng = random.Random(1)
    for _ in range(5):
        p = frac_params(6, rng)
        A1, A2, A3, A4, A5 = p.A
        P = generating_poly(p)
        S = A1 + A2 + A3 + A4 + A5
        assert P.coeff(3, 0) == 1
        assert P.coeff(2, 0) == -S / 2 and P.coeff(2, 1) == F(-5, 2)
        assert P.coeff(1, 2) == F(6, 4)
        assert P.coeff(1, 1) == (3 * (A1 + A5) + 2 * (A2 + A3 + A4)) / 4
        assert P.coeff(1, 0) == (A1 * (A3 + A4 + A5) + A2 * (A4 + A5) + A3 * A5) / 4
        # constant coefficient is -(A1+tau)(A3+tau)(A5+tau)/8
        assert P.coeff(0, 3) == F(-1, 8)
        assert P.coeff(0, 2) == -(A1 + A3 + A5) / 8
        assert P.coeff(0, 1) == -(A1 * A3 + A1 * A5 + A3 * A5) / 8
        assert P.coeff(0, 0) == -A1 * A3 * A5 / 8


def test_coefficients_depend_only_on_params():
    # two phase representatives of the same A_j give identical tables
    b1 = [1.5 * np.exp(0.3j), 2.0 * np.exp(-1.2j), 2.5, 1.5 * np.exp(2.2j)]
    b2 = [1.5, 2.0, 2.5 * np.exp(0.9j), 1.5]
    P1 = generating_poly(a_params(build_reciprocal(b1)))
    P2 = generating_poly(a_params(build_reciprocal(b2)))
    for i in range(P1.deg_zeta + 1):
        for j in range(P1.deg_tau + 1):
            assert abs(float(P1.coeff(i, j)) - float(P2.coeff(i, j))) <= 1e-12


def test_tau_degree_profile():
    rng = random.Random(2)
    for n in range(3, 9):
        p = frac_params(n, rng)
        P = generating_poly(p)
        k = n // 2
        assert P.deg_zeta == k
        for j in range(k + 1):
            degs = [P.zeta_coeffs[j].degree]
            assert degs[0] == k - j


def test_eval_residual_reference_example():
    M = build_reciprocal([1.5, 2, 2.5, 1.5])
    P = generating_poly(a_params(M))
    rng = np.random.default_rng(17)
    for _ in range(100):
        theta = rng.uniform(0, 2 * np.pi)
        lam = rng.uniform(-3, 3)
        assert eval_residual(P, M, theta, lam) <= 1e-9


def test_eval_residual_zero_slice_even():
    M = params_to_matrix(ReciprocalParams(A=(2.0, 3.0, 1.5)))
    P = generating_poly(a_params(M))
    for theta in (0.1, 0.9, 2.2):
        assert eval_residual(P, M, theta, 0.0) <= 1e-12


def test_eval_residual_n3_hand_values():
    M = params_to_matrix(ReciprocalParams(A=(2.0, 3.0)))
    P = generating_poly(a_params(M))
    # at theta = 0, lambda = 1: det = -lambda (lambda^2 - (A1+A2)/2 - 1)
    want = -1.0 * (1.0 - 2.5 - 1.0)
    got = float(P.eval(1.0, 1.0)) * -1.0
    assert abs(got - want) <= 1e-12
    assert eval_residual(P, M, 0.0, 1.0) <= 1e-12


def test_divide_by_linear_zero_shift():
    p = ReciprocalParams(A=(F(3), F(2), F(5)))
    P = generating_poly(p)
    _, rem = divide_by_linear(P, F(0), F(0))
    assert rem.coeffs == P.zeta_coeffs[0].coeffs


def test_divide_by_linear_exact_factor_n5():
    # A1 = A4 gives the exact rational factor zeta - (3 tau + A1+A2+A3)/2
    p = ReciprocalParams(A=(F(2), F(3), F(5), F(2)))
    P = generating_poly(p)
    quotient, rem = divide_by_linear(P, F(3, 2), (F(2) + F(3) + F(5)) / 2)
    assert rem.is_zero
    # quotient carries the inner factor zeta - (tau + A1)/2
    assert quotient.zeta_coeffs[0].coeffs == (F(-1), F(-1, 2))


def test_divide_by_linear_allequal_n4_float():
    A0 = 2.0
    P = generating_poly(ReciprocalParams(A=(A0,) * 3))
    x = (3 + math.sqrt(5)) / 4
    _, rem = divide_by_linear(P, x, A0 * x)
    assert max((abs(c) for c in rem.coeffs), default=0.0) <= 1e-12


def test_divide_by_linear_remainder_matches_q_forms():
    # remainder of the n=6 polynomial at arbitrary (x, z) equals the closed-form
    # tau-coefficients of the substitution
    from kippenhahn.classify import _q_polys
    rng = np.random.default_rng(23)
    A = tuple(rng.uniform(1, 6, 5))
    P = generating_poly(ReciprocalParams(A=A))
    for _ in range(5):
        x, z = rng.uniform(-2, 2.5), rng.uniform(-3, 9)
        _, rem = divide_by_linear(P, float(x), float(z))
        (q11, q10), (q22, q21, q20), (q32, q31, q30) = _q_polys(A, x)
        cubic = ((8 * x - 20) * x + 12) * x - 1
        want = [((z + q32) * z + q31) * z + q30,
                (q22 * z + q21) * z + q20,
                q11 * z + q10,
                cubic / 8]
        got = [float(rem.coeff(k)) for k in range(4)]
        assert np.allclose(got, want, atol=1e-9 * max(1.0, max(abs(w) for w in want)))


def test_resultant_linear_convention():
    a, b = F(3), F(7)
    f = UniPoly("z", [-a, F(1)])
    g = UniPoly("z", [-b, F(1)])
    res = resultant_in_z(f, g)
    assert res == a - b


def test_resultant_degenerate():
    zero = UniPoly("z", [])
    with pytest.raises(DegenerateInput):
        resultant_in_z(zero, zero)


def test_pipeline_matches_tables_exactly():
    rng = random.Random(31)
    for _ in range(6):
        p = frac_params(6, rng)
        P = generating_poly(p)
        taus = substitution_tau_coeffs(P)
        r1 = reduce_mod_cubic(resultant_in_z(taus[2], taus[1]))
        r2 = reduce_mod_cubic(resultant_in_z(taus[2], taus[0]))
        t1, t2 = rtables.resultant_quadratics(p.A)
        for k in range(3):
            assert rtables.R1_PIPELINE_SCALE * r1.coeff(k) == t1[2 - k]
            assert rtables.R2_PIPELINE_SCALE * r2.coeff(k) == t2[2 - k]


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=1, max_value=60))
@settings(max_examples=20, deadline=None)
def test_resultant_homogeneity(num, den):
    t = F(num, den)
    rng = random.Random(num * 61 + den)
    A = tuple(F(rng.randint(1, 20), rng.randint(1, 5)) + 1 for _ in range(5))
    At = tuple(t * a for a in A)
    (r12, r11, r10), (r22, r21, r20) = rtables.resultant_quadratics(A)
    (s12, s11, s10), (s22, s21, s20) = rtables.resultant_quadratics(At)
    assert (s12, s11, s10) == (t**2 * r12, t**2 * r11, t**2 * r10)
    assert (s22, s21, s20) == (t**3 * r22, t**3 * r21, t**3 * r20)


def test_all_equal_tables_vanish():
    for A0 in (F(1), F(2), F(7, 3)):
        t1, t2 = rtables.resultant_quadratics((A0,) * 5)
        assert all(v == 0 for v in t1 + t2)


def test_reduce_mod_cubic_identities():
    cubic = UniPoly("x", [F(-1), F(12), F(-20), F(8)])
    assert reduce_mod_cubic(cubic).is_zero
    x3 = UniPoly("x", [F(0), F(0), F(0), F(1)])
    rem = reduce_mod_cubic(x3)
    assert rem.coeffs == (F(1, 8), F(-12, 8), F(20, 8))
    # numeric invariance at the smallest root
    x1 = cubic_roots()[0]
    f = UniPoly("x", [F(2), F(-1), F(3), F(5), F(1)])
    g = reduce_mod_cubic(f)
    assert abs(float(f(x1)) - float(g(x1))) <= 1e-10


def test_cubic_roots_reference_values():
    roots = cubic_roots()
    assert np.allclose(roots, (0.0990311, 0.777479, 1.62349), atol=1e-5)
    assert abs(sum(roots) - 2.5) <= 1e-12
    trig = sorted(1 + math.cos(2 * j * math.pi / 7) for j in (3, 2, 1))
    assert np.allclose(roots, trig, atol=1e-12)


def test_generating_poly_n2():
    P = generating_poly(ReciprocalParams(A=(F(9, 4),)))
    assert P.deg_zeta == 1
    assert P.coeff(1, 0) == 1
    assert P.coeff(0, 0) == F(-9, 8)
    assert P.coeff(0, 1) == F(-1, 2)
    assert not P.origin_component


def test_generating_poly_rejects_n1():
    with pytest.raises(ValueError):
        generating_poly(ReciprocalParams(A=(), n=1))


def test_bivariate_eval_exact_and_float():
    P = generating_poly(ReciprocalParams(A=(F(2), F(3))))
    assert P.eval(F(7), F(1, 2)) == F(7) - F(5, 2) - F(1, 2)
    assert abs(P.eval(7.0, 0.5) - 4.0) <= 1e-15


def test_substitution_tau_coeffs_small_sizes():
    # the tau-coefficients of P(x tau + z, tau) are the classifier systems:
    # for n = 4 the leading one is x(x - 3/2) + 1/4, for n = 5 x(x - 2) + 3/4
    rng = random.Random(5)
    for n, lead in ((4, (F(1, 4), F(-3, 2), F(1))), (5, (F(3, 4), F(-2), F(1)))):
        p = frac_params(n, rng)
        A = p.A
        taus = substitution_tau_coeffs(generating_poly(p))
        top = taus[2]
        assert top.degree == 0
        assert top.coeff(0) == UniPoly("x", lead)
        # the z-free tail: constant tau-coefficient at z = 0 must equal P(0, 0)
        tail = taus[0]
        val = tail.coeff(0)
        if n == 4:
            assert val == UniPoly("x", [A[0] * A[2] / 4])
        else:
            assert val == UniPoly("x", [(A[0] * A[2] + A[0] * A[3] + A[1] * A[3]) / 4])


def test_substitution_matches_divide_remainder_numerically():
    rng = np.random.default_rng(31)
    for n in (4, 5, 6, 7):
        p = ReciprocalParams(A=tuple(F(k) for k in rng.integers(1, 7, n - 1)))
        P = generating_poly(p)
        taus = substitution_tau_coeffs(P)
        x0, z0 = F(5, 4), F(7, 3)
        _, rem = divide_by_linear(P, x0, z0)
        for k in range(len(taus)):
            want = taus[k](z0)
            if isinstance(want, UniPoly):
                want = want(x0)
            assert rem.coeff(k) == want
