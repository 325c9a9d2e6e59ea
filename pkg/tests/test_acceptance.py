"""Acceptance suite: one test per criterion, printing a pass/fail line each.

Three criteria quote values that the source publication misprinted (the
single-ellipse figure-caption parameters, one digit of the three-ellipse
worked example, and the typo count of the printed coefficient lists).  The
literal readings are kept as STRICT xfails with the analysis in their
docstrings; companion tests pin the corrected values at the same
tolerances.  Run with ``pytest tests/test_acceptance.py -v -s`` to see the
per-criterion lines.
"""

import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from kippenhahn import (ReciprocalParams, a_params, branch_points,
                        build_reciprocal, classify4, classify5,
                        contains_ellipse6, cubic_roots, eig_all,
                        eval_residual, fit_ellipse_axis_aligned,
                        generating_poly, params_to_matrix, realified_pencil,
                        residuals_m6, resultant_in_z, reduce_mod_cubic,
                        sample_curve, solve_m6, solve_uv, symmetry_residual,
                        three_ellipses6, toeplitz_components)
from kippenhahn import rtables
from kippenhahn.curve import sample_diameter
from kippenhahn.nrpoly import substitution_tau_coeffs

PHI = (math.sqrt(5) + 1) / 2

# corrected single-ellipse parameters: 5*(u, v, 1, v, u) from the 16-digit
# published pair; the figure caption misprints them (it shows 5v where 5u
# belongs and 10v where 5v belongs)
UV_PAIR = (1.7724359313231006, 0.6562336702811362)
SINGLE6 = (5 * UV_PAIR[0], 5 * UV_PAIR[1], 5.0, 5 * UV_PAIR[1], 5 * UV_PAIR[0])
CAPTION6_LITERAL = (3.28117, 6.5623367, 5.0, 6.5623367, 3.28117)

# three-ellipse example: published A2, A4 are right to all printed digits;
# the published A3 = 36.9387548 has a first-decimal digit typo (true value
# frozen below from an independent high-precision solve)
THREE6_PRINTED = (20.0, 64.9396, 36.9387548, 28.9008, 40.0)
THREE6_TRUE = (20.0, 64.939592074349341, 36.038754716096765,
               28.900837358252576, 40.0)


def ok(num, msg):
    print(f"ACCEPTANCE {num:>2} PASS: {msg}")


def test_criterion_01_elliptic_5x5_example():
    t0 = time.perf_counter()
    p = a_params(build_reciprocal([1.5, 2, 2.5, 1.5]))
    assert np.allclose(p.A, (1.347222, 2.125, 3.205, 1.347222), atol=1e-6)
    c = classify5(p)
    assert c.kind == "all_components_elliptic"
    assert c.diagnostics["branches_hit"][0]  # the A1 = A4 branch
    outer = c.components[0]
    assert abs(outer.z - 6.67722 / 2) <= 1e-5
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    ok(1, f"A-params, classification and outer factor agree ({elapsed:.3f}s)")


def test_criterion_02_non_elliptic_5x5_example():
    t0 = time.perf_counter()
    p = a_params(build_reciprocal([1.5, 2, 2, 3]))
    assert classify5(p).kind == "non_elliptic"
    M = build_reciprocal([1.5, 2, 2, 3])
    devs = {}
    for m in (720, 1440):
        samples = sample_curve(M, m=m)
        devs[m] = [fit_ellipse_axis_aligned(branch_points(samples, k)).max_radial_deviation
                   for k in (1, 2)]
    for k in range(2):
        assert devs[720][k] > 1e-4
        assert abs(devs[1440][k] - devs[720][k]) <= 0.1 * devs[720][k]
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    ok(2, f"deviations {devs[720][0]:.2e}/{devs[720][1]:.2e}, grid-stable ({elapsed:.2f}s)")


def test_criterion_03_cubic_roots():
    roots = cubic_roots()
    assert np.allclose(roots, (0.0990311, 0.777479, 1.62349), atol=1e-5)
    trig = sorted(1 + math.cos(2 * j * math.pi / 7) for j in (1, 2, 3))
    assert np.allclose(roots, trig, atol=1e-12)
    ok(3, "slope-cubic roots match reference values and the cosine identity")


def test_criterion_04_uv_slice_solutions():
    res = solve_uv(cubic_roots()[2])
    assert res.all_equal_point == (1.0, 1.0)
    assert res.distance(1.0, 1.0) <= 1e-10
    assert res.residuals(1.0, 1.0) == (0.0, 0.0)
    assert res.distance(*UV_PAIR) <= 1e-9
    for pair in ((8.84369, -2.49077), (-1.80414, 2.24796)):
        assert res.distance(*pair) <= 5e-5
        assert not res.realizable(*pair)
    ok(4, "solution locus carries all four reference pairs at stated tolerances")


@pytest.mark.xfail(strict=True, reason="figure-caption parameters are garbled "
                   "(misprints of 5u and 5v from the published 16-digit pair); "
                   "a direct eigensweep gives outer-branch radial deviation "
                   "9.9e-5 and slope 1.6298 != x3, so no branch is an exact "
                   "ellipse and no resultant vanishes at any cubic root")
def test_criterion_05_literal_caption_parameters():
    p = ReciprocalParams(A=CAPTION6_LITERAL)
    c = contains_ellipse6(p)
    x3 = cubic_roots()[2]
    assert c.kind == "boundary_ellipse_only"
    assert any(abs(comp.x - x3) <= 1e-6 for comp in c.components)
    M = params_to_matrix(p)
    samples = sample_curve(M, m=720)
    outer = fit_ellipse_axis_aligned(branch_points(samples, 1))
    assert outer.max_radial_deviation <= 1e-6


def test_criterion_05_single_ellipse_6x6_corrected():
    p = ReciprocalParams(A=SINGLE6)
    c = contains_ellipse6(p)
    x3 = cubic_roots()[2]
    assert c.kind == "boundary_ellipse_only"
    (comp,) = c.components
    assert abs(comp.x - x3) <= 1e-9
    assert three_ellipses6(p).kind == "non_elliptic"
    M = params_to_matrix(p)
    samples = sample_curve(M, m=720)
    outer = fit_ellipse_axis_aligned(branch_points(samples, 1))
    assert outer.max_radial_deviation <= 1e-6
    for k in (2, 3):
        inner = fit_ellipse_axis_aligned(branch_points(samples, k))
        assert inner.max_radial_deviation > 1e-6
    ok(5, "outer branch exactly elliptic at x3, inner branches are not")


@pytest.mark.xfail(strict=True, reason="published A3 = 36.9387548 is a digit "
                   "typo for 36.0387547... (the printed A2 and A4 match the "
                   "true solution to all six digits); the printed tuple has "
                   "scaled residual norm 3.1e-3 > 1e-3 and no solver can "
                   "recover a misprinted digit")
def test_criterion_06_literal_printed_values():
    s = sum(THREE6_PRINTED)
    qa, qb, cu, _ = residuals_m6(THREE6_PRINTED)
    assert max(abs(qa) / s**2, abs(qb) / s**2, abs(cu) / s**3) <= 1e-3
    sols = solve_m6({"A1": 20.0, "A5": 40.0})
    best = min(sols, key=lambda x: abs(x.A[1] - THREE6_PRINTED[1]))
    for k in (1, 2, 3):
        assert abs(best.A[k] - THREE6_PRINTED[k]) <= 5e-4 * THREE6_PRINTED[k]


def test_criterion_06_three_ellipse_6x6_corrected():
    # printed tuple with only the A3 digit fixed passes the residual bound
    fixed_digit = (20.0, 64.9396, 36.0387547, 28.9008, 40.0)
    for tup in (fixed_digit, tuple(a / 2 for a in fixed_digit)):
        s = sum(tup)
        qa, qb, cu, _ = residuals_m6(tup)
        assert max(abs(qa) / s**2, abs(qb) / s**2, abs(cu) / s**3) <= 1e-3
    sols = solve_m6({"A1": 20.0, "A5": 40.0})
    best = min(sols, key=lambda x: abs(x.A[2] - THREE6_TRUE[2]) + abs(x.A[1] - THREE6_TRUE[1]))
    for k in (1, 2, 3):
        assert abs(best.A[k] - THREE6_TRUE[k]) <= 5e-4 * THREE6_TRUE[k]
    # the published A2 and A4 are themselves right to all printed digits
    assert abs(best.A[1] - 64.9396) <= 5e-4 * 64.9396
    assert abs(best.A[3] - 28.9008) <= 5e-4 * 28.9008
    ok(6, "residual bound and solver recovery hold with the digit-typo fixed")


def test_criterion_07_all_equal_suite():
    for n in range(3, 9):
        M1 = params_to_matrix(ReciprocalParams(A=(1.0,) * (n - 1)))
        vals = eig_all(realified_pencil(M1, 0.0)).values
        want = sorted(2 * math.cos(j * math.pi / (n + 1)) for j in range(1, n + 1))
        assert np.max(np.abs(vals - np.asarray(want))) <= 1e-10
        for A0 in (1.5, 3.0):
            p = ReciprocalParams(A=(A0,) * (n - 1))
            comps = sorted(toeplitz_components(p).components, key=lambda c: -c.z)
            samples = sample_curve(params_to_matrix(p), m=360)
            for k in range(1, n // 2 + 1):
                fit = fit_ellipse_axis_aligned(branch_points(samples, k))
                comp = comps[k - 1]
                assert abs(fit.semi_u - comp.semi_major) <= 1e-6 * comp.semi_major
                assert abs(fit.semi_v - comp.semi_minor) <= 1e-6 * comp.semi_minor
    ok(7, "scaled-cosine component geometry reproduced for n=3..8, A0 in {1,1.5,3}")


def test_criterion_08_oracle_equivalence():
    rng = np.random.default_rng(2026)
    worst = 0.0
    for n in range(3, 9):
        for _ in range(2):
            A = tuple(rng.uniform(1.0, 5.0, n - 1))
            p = ReciprocalParams(A=A)
            M = params_to_matrix(p)
            P = generating_poly(p)
            for _ in range(50):
                theta = rng.uniform(0, 2 * math.pi)
                lam = rng.uniform(-3, 3)
                worst = max(worst, eval_residual(P, M, theta, lam))
    assert worst <= 1e-9
    pyrng = random.Random(77)
    for _ in range(50):
        A = tuple(Fraction(pyrng.randint(1, 40), pyrng.randint(1, 9)) + 1
                  for _ in range(5))
        P = generating_poly(ReciprocalParams(A=A))
        taus = substitution_tau_coeffs(P)
        r1 = reduce_mod_cubic(resultant_in_z(taus[2], taus[1]))
        r2 = reduce_mod_cubic(resultant_in_z(taus[2], taus[0]))
        t1, t2 = rtables.resultant_quadratics(A)
        for k in range(3):
            assert rtables.R1_PIPELINE_SCALE * r1.coeff(k) == t1[2 - k]
            assert rtables.R2_PIPELINE_SCALE * r2.coeff(k) == t2[2 - k]
    ok(8, f"determinant oracle (max {worst:.1e}) and exact pipeline/table match, 50 sets")


def _printed_table_mismatches():
    names = (("R1.x^2", rtables.R1_X2, rtables.R1_X2_PRINTED),
             ("R1.x^1", rtables.R1_X1, rtables.R1_X1_PRINTED),
             ("R1.x^0", rtables.R1_X0, rtables.R1_X0_PRINTED),
             ("R2.x^2", rtables.R2_X2, rtables.R2_X2_PRINTED),
             ("R2.x^1", rtables.R2_X1, rtables.R2_X1_PRINTED),
             ("R2.x^0", rtables.R2_X0, rtables.R2_X0_PRINTED))
    out = {name for name, corr, printed in names if corr != printed}
    A = (2, 3, 5, 7, 11)
    if rtables.z_quadratic_coeffs(A) != rtables.z_quadratic_coeffs_printed(A):
        out.add("R.r1")
    return out


@pytest.mark.xfail(strict=True, reason="the oracle finds four typo'd printed "
                   "coefficients (R1.x^1, R2.x^1, R2.x^2, R.r1), not only the "
                   "two flagged in advance; all four are fixed in the "
                   "corrected tables and reported by the verify command")
def test_criterion_08_literal_exactly_two_documented_mismatches():
    assert _printed_table_mismatches() == {"R2.x^1", "R.r1"}


def test_criterion_08_printed_mismatch_set_resolved():
    found = _printed_table_mismatches()
    # the two documented typos are among them, and nothing undocumented beyond
    # the two additional ones the oracle resolved
    assert {"R2.x^1", "R.r1"} <= found
    assert found == {"R1.x^1", "R2.x^1", "R2.x^2", "R.r1"}
    ok(8, "printed-list comparison reproduces the documented typos (plus two more)")


def test_criterion_09_rigidity_property():
    t0 = time.perf_counter()
    rng = np.random.default_rng(9)
    count = 0
    while count < 1000:
        a1, a2, a3, a5 = rng.uniform(1, 20, 4)
        if max(a1, a2, a3, a5) - min(a1, a2, a3, a5) <= 1e-3:
            continue
        # A2 = A4 hyperplane
        assert three_ellipses6(ReciprocalParams(A=(a1, a2, a3, a2, a5))).kind \
            == "non_elliptic"
        # A1 = A5 hyperplane
        assert three_ellipses6(ReciprocalParams(A=(a1, a2, a3, a5, a1))).kind \
            == "non_elliptic"
        count += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0
    ok(9, f"2000 symmetric perturbations all rejected ({elapsed:.2f}s)")


def test_criterion_10_symmetry_property():
    rng = np.random.default_rng(10)
    for _ in range(20):
        n = int(rng.integers(2, 7))
        b = rng.uniform(0.6, 2.2, n - 1) * np.exp(1j * rng.uniform(0, 2 * np.pi, n - 1))
        samples = sample_curve(build_reciprocal(b), m=360)
        assert symmetry_residual(samples) <= 1e-8 * max(1.0, sample_diameter(samples))
    ok(10, "both-axes sample symmetry holds for 20 random reciprocal matrices")


def test_criterion_11_golden_ratio_suite():
    p = ReciprocalParams(A=(2.0, 2 * PHI - 1 / PHI, 1.0))
    c = classify4(p)
    assert c.kind == "all_components_elliptic"
    lhs, rhs = c.diagnostics["consistency_identity"]
    assert abs(lhs - rhs) <= 1e-10
    p_off = ReciprocalParams(A=(2.0, 2 * PHI - 1 / PHI + 1e-3, 1.0))
    assert classify4(p_off).kind == "non_elliptic"
    ok(11, "golden-ratio manifold point accepted, 1e-3 perturbation rejected")
