"""Numerical sampling of Kippenhahn curves and axis-aligned ellipse fitting.

For every angle theta the eigenvectors of Re(e^{i theta} M) produce curve
points as quadratic-form values <M v, v>; the eigenvalue itself is the
support value of the tangent line at that angle.  Branches are labeled in
descending eigenvalue order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .eigsolve import eig_all
from .trimat import TridiagonalMatrix, phase_diagonal, realified_pencil


class DegenerateBranch(ValueError):
    """Branch collapses to a segment or point; an ellipse fit is meaningless."""


@dataclass(frozen=True)
class CurveSample:
    """One tangent-point sample: angle, branch (1 = largest eigenvalue),
    curve point (u, v), and the support value lambda."""

    theta: float
    branch: int
    point: complex
    lam: float


@dataclass(frozen=True)
class FitResult:
    semi_major: float
    semi_minor: float
    rms_residual: float
    max_radial_deviation: float
    # semi-axis along u and along v, before the major/minor reordering
    semi_u: float = 0.0
    semi_v: float = 0.0


def sample_curve(M: TridiagonalMatrix, m: int = 720) -> list:
    """Sample all n branches on a uniform theta grid over [0, 2 pi).

    The symmetric tridiagonal pencil is solved once per angle; eigenvectors
    are mapped back to the Hermitian pencil through the diagonal phase
    similarity before the quadratic form is evaluated.
    """
    if m < 8:
        raise ValueError("grid size m >= 8 required")
    n = M.n
    dense = M.dense()
    samples = []
    for i in range(m):
        theta = 2.0 * math.pi * i / m
        T = realified_pencil(M, theta)
        spectrum = eig_all(T, vectors=True)
        phases = phase_diagonal(M, theta)
        # descending eigenvalue order defines the branch index
        order = np.argsort(-spectrum.values, kind="stable")
        for k, idx in enumerate(order, start=1):
            v = phases * spectrum.vectors[:, idx]
            point = complex(np.vdot(v, dense @ v))
            samples.append(CurveSample(theta=theta, branch=k, point=point,
                                       lam=float(spectrum.values[idx])))
    return samples


def branch_points(samples, k: int) -> np.ndarray:
    """Complex points of branch k."""
    return np.array([s.point for s in samples if s.branch == k])


def _as_points(samples) -> np.ndarray:
    if isinstance(samples, np.ndarray):
        return samples.astype(complex)
    samples = list(samples)
    if samples and isinstance(samples[0], CurveSample):
        return np.array([s.point for s in samples])
    return np.asarray(samples, dtype=complex)


def fit_ellipse_axis_aligned(samples) -> FitResult:
    """Least-squares fit of u^2/p^2 + v^2/q^2 = 1 to one branch.

    Linear in (1/p^2, 1/q^2); raises DegenerateBranch when the points have
    no spread along one of the axes (segments, points).
    """
    pts = _as_points(samples)
    if pts.size < 8:
        raise ValueError("need at least 8 samples")
    u, v = pts.real, pts.imag
    if u.max() - u.min() <= 1e-10 or v.max() - v.min() <= 1e-10:
        raise DegenerateBranch("branch has no area; fit skipped")
    design = np.column_stack([u * u, v * v])
    coef, *_ = np.linalg.lstsq(design, np.ones_like(u), rcond=None)
    alpha, beta = coef
    if alpha <= 0 or beta <= 0:
        raise DegenerateBranch("degenerate conic: nonpositive axis coefficient")
    resid = design @ coef - 1.0
    rms = float(np.sqrt(np.mean(resid ** 2)))
    semi_u = 1.0 / math.sqrt(alpha)
    semi_v = 1.0 / math.sqrt(beta)
    r = np.hypot(u, v)
    psi = np.arctan2(v, u)
    r_fit = 1.0 / np.sqrt(alpha * np.cos(psi) ** 2 + beta * np.sin(psi) ** 2)
    max_dev = float(np.max(np.abs(r - r_fit)))
    return FitResult(semi_major=max(semi_u, semi_v), semi_minor=min(semi_u, semi_v),
                     rms_residual=rms, max_radial_deviation=max_dev,
                     semi_u=semi_u, semi_v=semi_v)


def deviation_metric(samples, fit: FitResult) -> float:
    """Max radial deviation of the samples from the fitted ellipse.

    Measured in polar angle about the origin, which is the common center of
    every component for the matrices considered here.
    """
    pts = _as_points(samples)
    if pts.size == 0:
        return 0.0
    u, v = pts.real, pts.imag
    alpha = 1.0 / fit.semi_u ** 2
    beta = 1.0 / fit.semi_v ** 2
    r = np.hypot(u, v)
    psi = np.arctan2(v, u)
    r_fit = 1.0 / np.sqrt(alpha * np.cos(psi) ** 2 + beta * np.sin(psi) ** 2)
    return float(np.max(np.abs(r - r_fit)))


def symmetry_residual(samples) -> float:
    """Hausdorff distance between the sample set and its axis reflections.

    Zero (to grid accuracy) for reciprocal matrices, whose curves are
    symmetric about both coordinate axes; general zero-diagonal tridiagonal
    matrices only guarantee central symmetry.
    """
    pts = _as_points(samples)
    if pts.size == 0:
        return 0.0
    cloud = np.column_stack([pts.real, pts.imag])
    tree = cKDTree(cloud)
    worst = 0.0
    for refl in (cloud * np.array([1.0, -1.0]), cloud * np.array([-1.0, 1.0])):
        d1 = tree.query(refl)[0].max()
        d2 = cKDTree(refl).query(cloud)[0].max()
        worst = max(worst, float(d1), float(d2))
    return worst


def sample_diameter(samples) -> float:
    pts = _as_points(samples)
    if pts.size == 0:
        return 0.0
    u, v = pts.real, pts.imag
    return float(math.hypot(u.max() - u.min(), v.max() - v.min()))
