"""Exact polynomial layer: generating polynomials, linear division, resultants.

The generating polynomial of a reciprocal n-by-n matrix, written in
zeta = lambda^2 and tau = cos(2 theta), is monic in zeta of degree
floor(n/2) with coefficients that are polynomials in the A_j parameters.
Everything in this module runs in exact rational arithmetic (fractions
convert floats losslessly); floating point enters only at root finding
and in the numeric determinant used as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .trimat import ReciprocalParams, TridiagonalMatrix, hermitian_offdiag

# 8 x^3 - 20 x^2 + 12 x - 1, ascending coefficients.  Its roots are the
# tau-slopes of the candidate linear factors for n = 6; they coincide with
# 1 + cos(2 j pi / 7) = 2 cos^2(j pi / 7), j = 3, 2, 1.
CUBIC_COEFFS = (Fraction(-1), Fraction(12), Fraction(-20), Fraction(8))


class DegenerateInput(ValueError):
    """Resultant input with both leading coefficients identically zero."""


def _to_exact(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(v)  # exact binary-to-rational conversion
    raise TypeError(f"cannot convert {type(v).__name__} to exact rational")


def _is_zero(c):
    if isinstance(c, UniPoly):
        return c.is_zero
    return c == 0


class UniPoly:
    """Dense univariate polynomial; coefficients may be exact rationals,
    floats, or UniPoly instances in another variable (for the tower Q[x][z])."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var, coeffs):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, var, value):
        return cls(var, [value])

    @classmethod
    def ident(cls, var, ring_zero=0, ring_one=1):
        return cls(var, [ring_zero, ring_one])

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def _coerce(self, other):
        if isinstance(other, UniPoly) and other.var == self.var:
            return other
        # scalars and polynomials in another variable embed as constants
        return UniPoly(self.var, [other])

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self.var, [self.coeff(k) + o.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly) or other.var != self.var:
            return UniPoly(self.var, [c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return UniPoly(self.var, [])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.var, out)

    def __rmul__(self, other):
        return UniPoly(self.var, [other * c for c in self.coeffs])

    def __pow__(self, k):
        out = UniPoly.const(self.var, Fraction(1))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        return self.degree <= 0 and self.coeff(0) == other

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __call__(self, value):
        """Horner evaluation; value may itself be a ring element."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def map_coeffs(self, f):
        return UniPoly(self.var, [f(c) for c in self.coeffs])

    def __repr__(self):
        return f"UniPoly({self.var!r}, {list(self.coeffs)!r})"


def unipoly_divmod(f: UniPoly, g: UniPoly):
    """Euclidean division over the rationals; g's leading coefficient must be invertible."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.var != g.var:
        raise ValueError("variable mismatch")
    lead = g.coeffs[-1]
    rem = list(f.coeffs)
    dq = len(rem) - len(g.coeffs)
    if dq < 0:
        return UniPoly(f.var, []), f
    quo = [Fraction(0)] * (dq + 1)
    for k in range(dq, -1, -1):
        if len(rem) < len(g.coeffs) + k:
            continue
        c = rem[len(g.coeffs) - 1 + k] / lead
        quo[k] = c
        for i, gi in enumerate(g.coeffs):
            rem[i + k] = rem[i + k] - c * gi
    return UniPoly(f.var, quo), UniPoly(f.var, rem)


@dataclass(frozen=True)
class BivariatePoly:
    """P(zeta, tau) = sum_i p_i(tau) zeta^i with exact coefficients.

    For an n-by-n reciprocal matrix the generating polynomial is monic of
    zeta-degree floor(n/2), and for odd n the discarded -lambda factor is
    recorded in origin_component.
    """

    zeta_coeffs: tuple  # tuple of UniPoly in tau, index = zeta power
    origin_component: bool = False
    n: int = field(default=0)

    @property
    def deg_zeta(self):
        return len(self.zeta_coeffs) - 1

    @property
    def deg_tau(self):
        return max((p.degree for p in self.zeta_coeffs if not p.is_zero), default=-1)

    def coeff(self, i, j):
        """Exact coefficient of zeta^i tau^j."""
        if 0 <= i < len(self.zeta_coeffs):
            return self.zeta_coeffs[i].coeff(j)
        return Fraction(0)

    def coeff_table(self):
        return [[self.coeff(i, j) for j in range(self.deg_tau + 1)]
                for i in range(self.deg_zeta + 1)]

    def eval(self, zeta, tau):
        result = 0.0 if isinstance(zeta, float) or isinstance(tau, float) else Fraction(0)
        for p in reversed(self.zeta_coeffs):
            result = result * zeta + p(tau)
        return result


def generating_poly(p: ReciprocalParams) -> BivariatePoly:
    """Generating polynomial of the reciprocal matrix with parameters p.

    Runs the tridiagonal determinant recursion symbolically with the
    squared off-diagonal (A_j + tau)/2, splitting off one factor of
    -lambda whenever the size is odd, so only even powers of lambda
    (i.e. powers of zeta) ever appear.
    """
    if p.n < 2:
        raise ValueError("n >= 2 required")
    half = Fraction(1, 2)
    beta = [UniPoly("tau", [_to_exact(Aj) * half, half]) for Aj in p.A]
    one = UniPoly.const("tau", Fraction(1))
    zero = UniPoly("tau", [])
    # G[m] = list of tau-polys per zeta power; det of the m-by-m section is
    # lambda^(m mod 2) * G[m](zeta, tau)
    g_prev, g_cur = [one], [-one]
    for m in range(2, p.n + 1):
        if m % 2 == 0:
            shifted = [zero] + [-c for c in g_cur]
            g_next = shifted
        else:
            g_next = [-c for c in g_cur]
        bm = beta[m - 2]
        for i, c in enumerate(g_prev):
            if i < len(g_next):
                g_next[i] = g_next[i] - bm * c
            else:
                g_next.append(-(bm * c))
        g_prev, g_cur = g_cur, g_next
    sign = 1 if p.n % 2 == 0 else -1
    coeffs = tuple(sign * c for c in g_cur)
    return BivariatePoly(zeta_coeffs=coeffs, origin_component=(p.n % 2 == 1), n=p.n)


def det_pencil(M: TridiagonalMatrix, theta: float, lam: float) -> float:
    """det(Re(e^{i theta} M) - lambda I) by the tridiagonal three-term recursion."""
    e2 = np.abs(hermitian_offdiag(M, theta)) ** 2
    d = float(np.real(np.exp(1j * theta) * M.a)) - lam
    dm2, dm1 = 1.0, d
    for j in range(1, M.n):
        dm2, dm1 = dm1, d * dm1 - e2[j - 1] * dm2
    return dm1 if M.n >= 1 else 1.0


def eval_residual(P: BivariatePoly, M: TridiagonalMatrix, theta: float, lam: float) -> float:
    """Relative gap between the polynomial and the numeric pencil determinant.

    For odd n the polynomial is premultiplied by -lambda before comparison.
    """
    tau = float(np.cos(2 * theta))
    pval = float(P.eval(float(lam) ** 2, tau))
    if P.origin_component:
        pval *= -lam
    dval = det_pencil(M, theta, lam)
    return abs(pval - dval) / max(1.0, abs(pval), abs(dval))


def divide_by_linear(P: BivariatePoly, x, z):
    """Synthetic division of P by zeta - (x tau + z).

    Returns (quotient, remainder); the remainder is P(x tau + z, tau) as a
    polynomial in tau.  Exact when x and z are rational; float otherwise.
    """
    if isinstance(x, float) or isinstance(z, float):
        lin = UniPoly("tau", [float(z), float(x)])
        conv = lambda q: q.map_coeffs(float)
    else:
        lin = UniPoly("tau", [_to_exact(z), _to_exact(x)])
        conv = lambda q: q
    ps = [conv(q) for q in P.zeta_coeffs]
    k = len(ps) - 1
    quo = [None] * k
    carry = ps[k]
    for i in range(k - 1, -1, -1):
        quo[i] = carry
        carry = ps[i] + lin * carry
    quotient = BivariatePoly(zeta_coeffs=tuple(quo), origin_component=P.origin_component, n=P.n)
    return quotient, carry


def substitution_tau_coeffs(P: BivariatePoly):
    """Coefficients of tau^k in P(x tau + z, tau) with x and z symbolic.

    Returns a list indexed by tau power; each entry is a UniPoly in z whose
    coefficients are UniPoly in x over the rationals.  This is the exact
    front half of the resultant pipeline.
    """
    x_elem = UniPoly("x", [Fraction(0), Fraction(1)])
    zero_x = UniPoly("x", [])
    one_x = UniPoly.const("x", Fraction(1))
    z_elem = UniPoly("z", [zero_x, one_x])
    x_in_z = UniPoly.const("z", x_elem)
    lin = UniPoly("tau", [z_elem, x_in_z])  # x*tau + z over Q[x][z]
    acc = UniPoly("tau", [])
    power = UniPoly.const("tau", UniPoly.const("z", one_x))
    for p in P.zeta_coeffs:
        acc = acc + p * power
        power = power * lin
    kmax = P.deg_zeta
    out = []
    for k in range(kmax + 2):
        c = acc.coeff(k)
        if not isinstance(c, UniPoly):
            c = UniPoly.const("z", UniPoly.const("x", _to_exact(c)))
        else:
            c = c.map_coeffs(lambda ci: ci if isinstance(ci, UniPoly)
                             else UniPoly.const("x", _to_exact(ci)))
        out.append(c)
    return out


def resultant_in_z(f: UniPoly, g: UniPoly) -> UniPoly:
    """Sylvester resultant with respect to z, f-rows first.

    Coefficients of f and g are polynomials in x (or rationals); the
    result is a UniPoly in x.  For monic linear f = z - a this equals g(a).
    """
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        raise DegenerateInput("resultant of the zero polynomial")

    def as_x(c):
        return c if isinstance(c, UniPoly) else UniPoly.const("x", _to_exact(c))

    fc = [as_x(f.coeff(k)) for k in range(m, -1, -1)]  # descending
    gc = [as_x(g.coeff(k)) for k in range(n, -1, -1)]
    if fc[0].is_zero and gc[0].is_zero:
        raise DegenerateInput("both leading coefficients vanish identically")
    size = m + n
    zero = UniPoly("x", [])
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return _det(rows)


def _det(rows):
    """Cofactor-expansion determinant over a commutative ring; tiny matrices only."""
    size = len(rows)
    if size == 1:
        return rows[0][0]
    total = None
    for j in range(size):
        a = rows[0][j]
        if _is_zero(a):
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _det(minor)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return UniPoly("x", [])
    return total


def reduce_mod_cubic(f: UniPoly) -> UniPoly:
    """Remainder of f modulo 8x^3 - 20x^2 + 12x - 1, exact arithmetic."""
    cubic = UniPoly("x", CUBIC_COEFFS)
    fe = f.map_coeffs(_to_exact)
    _, rem = unipoly_divmod(fe, cubic)
    return rem


def cubic_roots():
    """Roots of 8x^3 - 20x^2 + 12x - 1 ascending, Newton-polished floats."""
    raw = np.roots([8.0, -20.0, 12.0, -1.0])
    roots = sorted(float(np.real(r)) for r in raw)
    out = []
    for r in roots:
        for _ in range(3):
            fv = ((8 * r - 20) * r + 12) * r - 1
            dv = (24 * r - 40) * r + 12
            r -= fv / dv
        out.append(r)
    return tuple(out)
