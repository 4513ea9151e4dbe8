"""Shared numerical machinery.

Scalar root solving for monotone residuals, Richardson-extrapolated
central differences, a finite-difference frozen sound-speed oracle that
stays independent of any closed-form sound speed, a generic convexity
audit, and the 3-parameter least-squares fit used by Cv(T) calibration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BracketError, ConvergenceError, NumericalError, RankDeficiencyError, ValidationError

#: Per-variable step floors for relative finite-difference steps.
SCALE_RHO = 1.0    # kg/m3
SCALE_T = 1.0      # K
SCALE_P = 1e5      # Pa


@dataclass(frozen=True)
class RootResult:
    root: float
    iterations: int
    residual: float


def solve_monotone(g, lo, hi, *, tol_rel=1e-12, max_iter=100, dg=None, x0=None) -> RootResult:
    """Find the root of a monotone scalar function on a bracket.

    Newton steps (when ``dg`` is given) or damped secant steps, each
    safeguarded by bisection so the iterate never leaves the initial
    bracket.

    Parameters
    ----------
    g : callable
        Residual; ``g(lo)`` and ``g(hi)`` must differ in sign (or vanish).
    lo, hi : float
        Bracket endpoints.
    tol_rel : float
        Relative tolerance on the root.
    max_iter : int
        Iteration budget; exceeding it raises :class:`ConvergenceError`.
    dg : callable, optional
        Analytic derivative of ``g``; enables Newton steps.
    x0 : float, optional
        Initial guess, clipped into the bracket.
    """
    if hi < lo:
        lo, hi = hi, lo
    glo, ghi = g(lo), g(hi)
    if glo == 0.0:
        return RootResult(lo, 0, 0.0)
    if ghi == 0.0:
        return RootResult(hi, 0, 0.0)
    if (glo > 0.0) == (ghi > 0.0):
        raise BracketError(f"g({lo:g}) = {glo:g} and g({hi:g}) = {ghi:g} have the same sign")

    xl, xh, gl, gh = lo, hi, glo, ghi
    # orientation is fixed for a monotone residual; never re-read it from the
    # damped endpoint values below (damping can underflow them to zero)
    sign_high = ghi > 0.0
    # roots below machine epsilon times the problem scale are unresolvable,
    # so the relative criterion carries an absolute floor tied to the bracket
    tol_floor = 1e-15 * (hi - lo)
    x = 0.5 * (lo + hi) if x0 is None else min(max(x0, lo), hi)
    side = 0
    for it in range(1, max_iter + 1):
        gx = g(x)
        if gx == 0.0:
            return RootResult(x, it, 0.0)
        if (gx > 0.0) == sign_high:
            xh, gh = x, gx
            if side == +1:
                gl *= 0.5  # Illinois damping against endpoint stagnation
            side = +1
        else:
            xl, gl = x, gx
            if side == -1:
                gh *= 0.5
            side = -1

        xn = None
        if dg is not None:
            d = dg(x)
            if d != 0.0 and math.isfinite(d):
                cand = x - gx / d
                if xl < cand < xh:
                    xn = cand
        if xn is None:
            denom = gh - gl
            if denom != 0.0:
                cand = (xl * gh - xh * gl) / denom
                if xl < cand < xh:
                    xn = cand
        if xn is None:
            xn = 0.5 * (xl + xh)

        tol = max(tol_rel * max(abs(x), abs(xn)), tol_floor)
        if abs(xn - x) <= tol or (xh - xl) <= tol:
            return RootResult(xn, it, abs(g(xn)))
        x = xn
    raise ConvergenceError(f"no convergence within {max_iter} iterations (bracket [{xl:g}, {xh:g}])")


def fd_derivative(f, x, scale_floor=1.0):
    """Derivative of ``f`` at ``x`` by central differences.

    Step ``h = max(|x|, scale_floor) * 1e-6``, Richardson-extrapolated
    once, leaving a truncation error of order h^4.
    """
    h = max(abs(x), scale_floor) * 1e-6
    d1 = (f(x + h) - f(x - h)) / (2.0 * h)
    h2 = 0.5 * h
    d2 = (f(x + h2) - f(x - h2)) / (2.0 * h2)
    return (4.0 * d2 - d1) / 3.0


def fd_partial(f, point, arg, scale_floor=1.0):
    """Partial derivative of ``f(*point)`` with respect to ``point[arg]``."""
    point = tuple(point)

    def along(x):
        p = list(point)
        p[arg] = x
        return f(*p)

    return fd_derivative(along, point[arg], scale_floor)


def _invert_temperature(p_fn, rho, P_target, T_guess):
    """Solve ``p_fn(rho, T) = P_target`` for T near ``T_guess``.

    Assumes pressure strictly increasing in temperature, which holds for
    every model in this library.
    """

    def g(T):
        return p_fn(rho, T) - P_target

    lo = T_guess * (1.0 - 1e-4)
    hi = T_guess * (1.0 + 1e-4)
    for _ in range(80):
        if g(lo) <= 0.0:
            break
        lo *= 0.5
    else:
        raise NumericalError("temperature inversion failed to bracket from below")
    for _ in range(80):
        if g(hi) >= 0.0:
            break
        hi *= 2.0
    else:
        raise NumericalError("temperature inversion failed to bracket from above")
    return solve_monotone(g, lo, hi, tol_rel=1e-13, max_iter=200).root


@dataclass(frozen=True)
class OracleSoundSpeed:
    """Squared frozen sound speed from two independent difference paths.

    ``c2_energy`` differentiates the internal energy on constant-pressure
    and constant-density paths (Gibbs-identity form); ``c2_gamma`` is
    ``(Cp/Cv) (dP/drho)_T`` with the heat capacities themselves taken by
    finite differences.  The two are derived from the same definition, so
    their disagreement measures the numerical error of the oracle.
    """

    c2_energy: float
    c2_gamma: float
    cp: float
    cv: float

    @property
    def rel_disagreement(self):
        return abs(self.c2_energy - self.c2_gamma) / max(abs(self.c2_energy), abs(self.c2_gamma))


def sound_speed_fd_oracle(e_fn, p_fn, rho, T) -> OracleSoundSpeed:
    """Frozen sound speed of an EOS given only its primitive evaluators.

    Parameters
    ----------
    e_fn, p_fn : callable
        ``e(rho, T)`` in J/kg and ``P(rho, T)`` in Pa.
    rho, T : float
        Evaluation point.
    """
    P = p_fn(rho, T)
    eT = fd_derivative(lambda t: e_fn(rho, t), T, SCALE_T)
    erho = fd_derivative(lambda r: e_fn(r, T), rho, SCALE_RHO)
    pT = fd_derivative(lambda t: p_fn(rho, t), T, SCALE_T)
    prho = fd_derivative(lambda r: p_fn(r, T), rho, SCALE_RHO)

    cv = eT
    cp = (eT + pT / rho) - (erho + prho / rho - P / rho**2) * pT / prho
    c2_gamma = (cp / cv) * prho

    def e_at(rho_, P_):
        return e_fn(rho_, _invert_temperature(p_fn, rho_, P_, T))

    dedrho_P = fd_derivative(lambda r: e_at(r, P), rho, SCALE_RHO)
    dedP_rho = fd_derivative(lambda p: e_at(rho, p), P, SCALE_P)
    c2_energy = (P / rho**2 - dedrho_P) / dedP_rho
    return OracleSoundSpeed(c2_energy=c2_energy, c2_gamma=c2_gamma, cp=cp, cv=cv)


def convexity_audit_fd(e_fn, p_fn, rho, T):
    """Evaluate the four convexity criteria from finite differences alone.

    Returns a :class:`~redeos.types.ConvexityReport`; the criterion values
    follow the density form of the criteria, so their signs are directly
    comparable with the closed-form reports of the kernels.
    """
    from .types import ConvexityReport, convexity_signs_ok

    P = p_fn(rho, T)
    eT = fd_derivative(lambda t: e_fn(rho, t), T, SCALE_T)
    erho = fd_derivative(lambda r: e_fn(r, T), rho, SCALE_RHO)
    pT = fd_derivative(lambda t: p_fn(rho, t), T, SCALE_T)
    prho = fd_derivative(lambda r: p_fn(r, T), rho, SCALE_RHO)

    cp = (eT + pT / rho) - (erho + prho / rho - P / rho**2) * pT / prho
    c2 = (cp / eT) * prho

    m = P - rho**2 * erho
    crit_a = rho**2 * c2
    crit_b = m / (pT * eT)
    crit_c = -m / eT
    crit_d = m / eT**2 * ((eT / pT) * rho**2 * c2 + rho**2 * erho - P)
    criteria = (crit_a, crit_b, crit_c, crit_d)
    return ConvexityReport(convex=convexity_signs_ok(criteria), criteria=criteria)


@dataclass(frozen=True)
class LsqFit:
    """Result of the 3-parameter heat-capacity fit."""

    Cv0: float             # J/(kg K)
    c: float               # J/(kg K^2)
    q: float               # J/kg
    residual_norm: float   # J/kg, 2-norm over the rows
    condition: float       # condition estimate of the scaled normal matrix


#: Column scales conditioning the normal equations (T in the thousands,
#: T^2/2 in the millions).
_COL_SCALE = (1e-3, 1e-7, 1.0)

#: Condition-number ceiling beyond which the fit is declared rank deficient.
_COND_LIMIT = 1e12


def lsq_fit_3(temperatures, targets) -> LsqFit:
    """Fit ``y = Cv0*T + (c/2)*T^2 + q`` by column-scaled normal equations.

    Exact on consistent systems; raises :class:`RankDeficiencyError` when
    the temperatures do not spread enough to separate the three columns.
    """
    T = np.asarray(temperatures, dtype=float)
    y = np.asarray(targets, dtype=float)
    if T.ndim != 1 or T.shape != y.shape:
        raise ValidationError("temperatures and targets must be 1-d arrays of equal length")
    if T.size < 3:
        raise ValidationError(f"at least 3 rows are required, got {T.size}")

    A = np.column_stack((T * _COL_SCALE[0], 0.5 * T * T * _COL_SCALE[1], np.ones_like(T)))
    M = A.T @ A
    condition = float(np.linalg.cond(M))
    if not math.isfinite(condition) or condition > _COND_LIMIT:
        raise RankDeficiencyError(
            f"insufficient temperature spread: condition {condition:.3g} exceeds {_COND_LIMIT:g}")
    beta = np.linalg.solve(M, A.T @ y)
    Cv0 = float(beta[0] * _COL_SCALE[0])
    c = float(beta[1] * _COL_SCALE[1])
    q = float(beta[2])
    resid = y - (Cv0 * T + 0.5 * c * T * T + q)
    return LsqFit(Cv0=Cv0, c=c, q=q, residual_norm=float(np.linalg.norm(resid)), condition=condition)
