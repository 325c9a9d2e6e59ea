"""Constructive solvers on the 6-by-6 ellipticity manifolds.

The three-ellipse variety is cut out by two quadratics and one cubic in
(A_1, ..., A_5) (all homogeneous); nontrivial points are constructed by
fixing two of the outer parameters, solving the quadratic pair for the
remaining two along an A_3 sweep, and bisecting the cubic condition.

The single-ellipse slice A_1 = A_5 = u A_3, A_2 = A_4 = v A_3 turns out to
be a line in the (u, v) plane for each root of the slope cubic (both
reduced resultants share a linear factor there), so the dedicated solver
returns a one-dimensional locus rather than isolated points.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import rtables
from .nrpoly import cubic_roots
from .trimat import ReciprocalParams, TridiagonalMatrix, params_to_matrix

log = logging.getLogger(__name__)

PARAM_NAMES = ("A1", "A2", "A3", "A4", "A5")


class NoBracket(RuntimeError):
    """The cubic condition never changes sign along the sweep."""


class NotRealizable(ValueError):
    """No reciprocal matrix attains parameters with A_j < 1."""


@dataclass(frozen=True)
class M6Solution:
    """A point of the three-ellipse variety with its residuals."""

    A: tuple
    residuals: tuple  # quad_a, quad_b, cubic, quad_diff
    branch: str = ""

    @property
    def realizable(self) -> bool:
        return all(a >= 1.0 - 1e-9 for a in self.A)

    def scaled_norm(self) -> float:
        s = sum(self.A)
        qa, qb, cu, _ = self.residuals
        return max(abs(qa) / s ** 2, abs(qb) / s ** 2, abs(cu) / s ** 3)


def residuals_m6(A, exact: bool = False):
    """The two quadratic conditions, the cubic one, and their difference.

    Evaluation is exact (floats convert losslessly to rationals), so the
    identity quad_a - quad_b = quad_diff holds with no rounding; results
    come back as floats unless exact=True.
    """
    Aex = tuple(Fraction(a) if not isinstance(a, Fraction) else a for a in A)
    vals = rtables.ell3_residuals(Aex)
    if exact:
        return vals
    return tuple(float(v) for v in vals)


def _ell3_pair_and_grads(A):
    qa = float(rtables.eval_table(rtables.ELL3_QUAD_A, A))
    qb = float(rtables.eval_table(rtables.ELL3_QUAD_B, A))
    ga = rtables.grad_table(rtables.ELL3_QUAD_A, A)
    gb = rtables.grad_table(rtables.ELL3_QUAD_B, A)
    return (qa, qb), (ga, gb)


def _solve_quad_pair(fixed_idx, fixed_vals, free_idx, a3, start, scale, max_iter=60):
    """Newton on the two quadratic conditions in the two free parameters."""
    A = [0.0] * 5
    for i, v in zip(fixed_idx, fixed_vals):
        A[i] = v
    A[2] = a3
    x = np.array(start, dtype=float)
    for _ in range(max_iter):
        A[free_idx[0]], A[free_idx[1]] = x
        (qa, qb), (ga, gb) = _ell3_pair_and_grads(A)
        F = np.array([qa, qb])
        if np.max(np.abs(F)) <= 1e-13 * scale ** 2:
            return tuple(x)
        J = np.array([[ga[free_idx[0]], ga[free_idx[1]]],
                      [gb[free_idx[0]], gb[free_idx[1]]]])
        try:
            step = np.linalg.solve(J, F)
        except np.linalg.LinAlgError:
            return None
        x = x - step
        if not np.all(np.isfinite(x)) or np.max(np.abs(x)) > 1e8 * scale:
            return None
    return None


def _cubic_at(fixed_idx, fixed_vals, free_idx, a3, free_vals):
    A = [0.0] * 5
    for i, v in zip(fixed_idx, fixed_vals):
        A[i] = v
    A[2] = a3
    A[free_idx[0]], A[free_idx[1]] = free_vals
    return float(rtables.eval_table(rtables.ELL3_CUBIC, A)), tuple(A)


def solve_m6(fixed: dict, a3_bracket=None, grid: int = 200):
    """Sweep A_3, solving the quadratic pair for the two free parameters and
    bisecting the cubic condition at its sign changes.

    fixed maps two names among A1, A2, A4, A5 to values.  Solutions with
    any A_j < 1 are returned but flagged not realizable.  Raises NoBracket
    when the cubic condition never changes sign on any tracked branch.
    """
    names = sorted(fixed)
    if len(names) != 2 or any(nm not in ("A1", "A2", "A4", "A5") for nm in names):
        raise ValueError("fix exactly two of A1, A2, A4, A5")
    if set(names) in ({"A1", "A5"}, {"A2", "A4"}) and \
            abs(fixed[names[0]] - fixed[names[1]]) <= 1e-12:
        warnings.warn("fixed pair imposes a symmetry hyperplane; only the "
                      "all-equal ray lies on the three-ellipse variety there",
                      stacklevel=2)
    fixed_idx = [PARAM_NAMES.index(nm) for nm in names]
    fixed_vals = [float(fixed[nm]) for nm in names]
    free_idx = [i for i in (0, 1, 3, 4) if i not in fixed_idx]
    scale = max(fixed_vals)
    if a3_bracket is None:
        a3_bracket = (scale / 10.0, 10.0 * scale)
    a3_grid = np.linspace(a3_bracket[0], a3_bracket[1], grid)

    fresh_starts = [(scale, scale), (scale / 2, 2 * scale), (2 * scale, scale / 2),
                    (scale / 4, scale / 4), (3 * scale, 3 * scale)]
    diverged = 0
    track = []  # per grid point: list of free-pair solutions
    prev = []
    for a3 in a3_grid:
        starts = list(prev) + [(a3, a3)] + fresh_starts
        found = []
        for st in starts:
            sol = _solve_quad_pair(fixed_idx, fixed_vals, free_idx, a3, st, scale)
            if sol is None:
                diverged += 1
                continue
            if all(max(abs(sol[0] - f[0]), abs(sol[1] - f[1])) > 1e-6 * scale
                   for f in found):
                found.append(sol)
        track.append((a3, found))
        prev = found
    if diverged:
        log.debug("solve_m6: %d Newton starts diverged", diverged)

    solutions = []
    seen = []
    for (a3_lo, sols_lo), (a3_hi, sols_hi) in zip(track, track[1:]):
        for f_lo in sols_lo:
            # continue the same branch to the next grid point
            cands = [f for f in sols_hi
                     if max(abs(f[0] - f_lo[0]), abs(f[1] - f_lo[1])) < 0.25 * scale + 1e-6]
            if not cands:
                continue
            f_hi = min(cands, key=lambda f: max(abs(f[0] - f_lo[0]), abs(f[1] - f_lo[1])))
            g_lo, _ = _cubic_at(fixed_idx, fixed_vals, free_idx, a3_lo, f_lo)
            g_hi, _ = _cubic_at(fixed_idx, fixed_vals, free_idx, a3_hi, f_hi)
            if g_lo == 0.0:
                root = (a3_lo, f_lo)
            elif g_lo * g_hi < 0:
                root = _bisect_cubic(fixed_idx, fixed_vals, free_idx,
                                     (a3_lo, f_lo, g_lo), (a3_hi, f_hi, g_hi), scale)
            else:
                continue
            if root is None:
                continue
            a3r, fr = root
            _, A = _cubic_at(fixed_idx, fixed_vals, free_idx, a3r, fr)
            A = _polish_full(fixed_idx, fixed_vals, free_idx, A, scale)
            if A is None:
                continue
            if any(max(abs(a - b) for a, b in zip(A, s)) <= 1e-8 * max(1.0, scale)
                   for s in seen):
                continue
            seen.append(A)
            res = residuals_m6(A)
            solutions.append(M6Solution(
                A=A, residuals=res,
                branch=f"free={PARAM_NAMES[free_idx[0]]},{PARAM_NAMES[free_idx[1]]}"
                       f"; A3 near {a3r:.6g}"))
    if not solutions:
        raise NoBracket("cubic condition has no sign change on the sweep")
    return sorted(solutions, key=lambda s: s.A)


def _bisect_cubic(fixed_idx, fixed_vals, free_idx, lo, hi, scale):
    a3_lo, f_lo, g_lo = lo
    a3_hi, f_hi, g_hi = hi
    for _ in range(80):
        a3_mid = 0.5 * (a3_lo + a3_hi)
        start = (0.5 * (f_lo[0] + f_hi[0]), 0.5 * (f_lo[1] + f_hi[1]))
        f_mid = _solve_quad_pair(fixed_idx, fixed_vals, free_idx, a3_mid, start, scale)
        if f_mid is None:
            return None
        g_mid, _ = _cubic_at(fixed_idx, fixed_vals, free_idx, a3_mid, f_mid)
        if g_mid == 0.0 or (a3_hi - a3_lo) <= 1e-14 * max(1.0, abs(a3_mid)):
            return a3_mid, f_mid
        if g_lo * g_mid < 0:
            a3_hi, f_hi, g_hi = a3_mid, f_mid, g_mid
        else:
            a3_lo, f_lo, g_lo = a3_mid, f_mid, g_mid
    return a3_mid, f_mid


def _polish_full(fixed_idx, fixed_vals, free_idx, A, scale):
    """Final Newton on all three conditions in (free1, free2, A3)."""
    idx = [free_idx[0], free_idx[1], 2]
    A = list(A)
    for _ in range(50):
        qa = float(rtables.eval_table(rtables.ELL3_QUAD_A, A))
        qb = float(rtables.eval_table(rtables.ELL3_QUAD_B, A))
        cu = float(rtables.eval_table(rtables.ELL3_CUBIC, A))
        F = np.array([qa, qb, cu])
        if abs(qa) <= 1e-12 * scale**2 and abs(qb) <= 1e-12 * scale**2 \
                and abs(cu) <= 1e-12 * scale**3:
            return tuple(A)
        ga = rtables.grad_table(rtables.ELL3_QUAD_A, A)
        gb = rtables.grad_table(rtables.ELL3_QUAD_B, A)
        gc = rtables.grad_table(rtables.ELL3_CUBIC, A)
        J = np.array([[ga[i] for i in idx], [gb[i] for i in idx], [gc[i] for i in idx]],
                     dtype=float)
        try:
            step = np.linalg.solve(J, F)
        except np.linalg.LinAlgError:
            return None
        for k, i in enumerate(idx):
            A[i] -= step[k]
        if not all(np.isfinite(A)):
            return None
    return None


@dataclass(frozen=True)
class UVSolveResult:
    """Solution locus of the single-ellipse conditions on the symmetric slice.

    pairs are deduplicated Newton limits; when they form a one-dimensional
    family, line holds (a, b, c) with a u + b v + c = 0 and unit (a, b).
    """

    root: float
    pairs: tuple
    line: Optional[tuple] = None
    all_equal_point: Optional[tuple] = None

    def residuals(self, u, v):
        A = (u, v, 1.0, v, u)
        r1, r2 = rtables.eval_resultants_at(A, self.root)
        return float(r1), float(r2)

    def distance(self, u, v) -> float:
        """Distance from (u, v) to the returned locus."""
        if self.line is not None:
            a, b, c = self.line
            return abs(a * u + b * v + c)
        if not self.pairs:
            return float("inf")
        return min(max(abs(u - p[0]), abs(v - p[1])) for p in self.pairs)

    def contains(self, u, v, tol: float = 1e-8) -> bool:
        r1, r2 = self.residuals(u, v)
        s = abs(u) + abs(v) + 1.0
        return (abs(r1) <= tol * s ** 2 and abs(r2) <= tol * s ** 3
                and self.distance(u, v) <= max(tol, 1e-6))

    @staticmethod
    def realizable(u, v) -> bool:
        """Positive pairs scale (A_3 > 1) to admissible parameter vectors."""
        return u > 0 and v > 0


def _uv_system(x_t, u, v):
    """Residuals and Jacobian of both resultants at x_t on the symmetric slice."""
    A = (u, v, 1.0, v, u)
    r1, r2 = rtables.eval_resultants_at(A, x_t)
    # chain rule through A = (u, v, 1, v, u)
    vals = []
    for tables in (rtables.R1_TABLES, rtables.R2_TABLES):
        du = dv = 0.0
        for t, power in zip(tables, (2, 1, 0)):
            g = rtables.grad_table(t, A)
            w = x_t ** power
            du += (g[0] + g[4]) * w
            dv += (g[1] + g[3]) * w
        vals.append((du, dv))
    J = np.array([[vals[0][0], vals[0][1]], [vals[1][0], vals[1][1]]], dtype=float)
    return np.array([float(r1), float(r2)]), J


def solve_uv(x_target: float, box=(-5.0, 12.0), grid: int = 12):
    """All (u, v) with both reduced resultants vanishing at x_target.

    x_target must be (close to) one of the slope-cubic roots.  Runs Newton
    from a coarse grid of starts, deduplicates, and detects the collinear
    structure of the converged set; the locus is in fact a full line for
    each root, carrying the distinguished all-equal point (1, 1).
    """
    roots = cubic_roots()
    x_t = min(roots, key=lambda r: abs(r - x_target))
    if abs(x_t - x_target) > 1e-6:
        raise ValueError(f"x_target must be a root of the slope cubic, got {x_target}")
    lo, hi = box
    sols = []
    for iu in range(grid + 1):
        for iv in range(grid + 1):
            u = lo + (hi - lo) * iu / grid
            v = lo + (hi - lo) * iv / grid
            x = np.array([u, v])
            ok = False
            for _ in range(80):
                F, J = _uv_system(x_t, x[0], x[1])
                s = abs(x[0]) + abs(x[1]) + 1.0
                if abs(F[0]) <= 1e-13 * s ** 2 and abs(F[1]) <= 1e-13 * s ** 3:
                    ok = True
                    break
                try:
                    step = np.linalg.solve(J, F)
                except np.linalg.LinAlgError:
                    break
                x = x - step
                if not np.all(np.isfinite(x)) or np.max(np.abs(x)) > 1e6:
                    break
            if ok and lo - 1 <= x[0] <= hi + 1 and lo - 1 <= x[1] <= hi + 1:
                if all(max(abs(x[0] - p[0]), abs(x[1] - p[1])) > 1e-8 for p in sols):
                    sols.append((float(x[0]), float(x[1])))
    sols.sort()
    line = _detect_line(sols, x_t)
    all_equal = None
    if line is not None:
        a, b, c = line
        if abs(a + b) > 1e-12:
            t = -c / (a + b)
            # the all-equal parameter point solves the system identically;
            # snap to it when the intersection with u = v confirms that
            if abs(t - 1.0) <= 1e-9 and all(
                    v == 0 for v in rtables.eval_resultants_at((1, 1, 1, 1, 1), 1)):
                t = 1.0
            all_equal = (t, t)
    elif any(max(abs(p[0] - 1), abs(p[1] - 1)) <= 1e-9 for p in sols):
        all_equal = (1.0, 1.0)
    return UVSolveResult(root=x_t, pairs=tuple(sols), line=line,
                         all_equal_point=all_equal)


def _detect_line(sols, x_t=None):
    """Line through the bulk of the solutions, if they are collinear.

    Newton limits scatter near crossing points of the solution set (the
    all-equal point), which would tilt a plain least-squares fit, so the
    line is seeded from point pairs and kept only when it collects most of
    the cloud at tight tolerance; a detected line is then certified by
    exact evaluation of both resultants at fresh points along it.
    """
    if len(sols) < 3:
        return None
    pts = np.asarray(sols)
    step = max(1, len(pts) // 15)
    reps = pts[::step]
    best = None
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            chord = reps[j] - reps[i]
            length = np.hypot(*chord)
            if length < 1e-3:
                continue
            normal = np.array([-chord[1], chord[0]]) / length
            resid = np.abs((pts - reps[i]) @ normal)
            count = int((resid <= 1e-7).sum())
            if best is None or count > best[0]:
                best = (count, resid <= 1e-7)
    if best is None or best[0] < max(3, len(pts) // 2):
        return None  # isolated solutions, not a one-dimensional family
    sub = pts[best[1]]
    center = sub.mean(axis=0)
    _, sv, vt = np.linalg.svd(sub - center, full_matrices=False)
    if sv[1] > 1e-7 * max(1.0, sv[0]):
        return None
    a, b = vt[1] / np.linalg.norm(vt[1])
    c = -(a * center[0] + b * center[1])
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    line = (float(a), float(b), float(c))
    if x_t is not None and not _certify_line(line, x_t):
        return None
    return line


def _certify_line(line, x_t):
    """Both resultants must vanish along the candidate line, not just near
    the sampled solutions."""
    a, b, c = line
    for t in (-7.3, -2.1, 0.4, 3.9, 9.8):
        # point at parameter t along the line
        u = -a * c + b * t
        v = -b * c - a * t
        A = (u, v, 1.0, v, u)
        r1, r2 = rtables.eval_resultants_at(A, x_t)
        s = abs(u) + abs(v) + 1.0
        if abs(r1) > 1e-8 * s ** 2 or abs(r2) > 1e-8 * s ** 3:
            return False
    return True


def realize(sol) -> TridiagonalMatrix:
    """Reciprocal matrix attaining the solution's parameters.

    Raises NotRealizable when some A_j < 1 (no reciprocal matrix exists).
    """
    A = sol.A if isinstance(sol, M6Solution) else tuple(sol)
    if any(a < 1.0 - 1e-9 for a in A):
        raise NotRealizable(f"parameters below the A_j >= 1 floor: {A}")
    return params_to_matrix(ReciprocalParams(A=tuple(max(a, 1.0) for a in A)))
