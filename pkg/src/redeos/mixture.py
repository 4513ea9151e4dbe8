"""Mixture equations of state for gas products of several reactive materials.

The gases are assumed ideally mixed and in temperature and pressure
equilibrium, with frozen composition (no post-combustion between them,
which is why every component must share the oxygen-balance sign).  The
Noble-Abel mixture closes in mass-fraction-weighted coefficients and stays
explicit; the virial mixture couples the component densities through the
pressure and needs a scalar iterative solve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .constants import R_UNIVERSAL
from .errors import DomainError, ValidationError
from .numerics import solve_monotone
from .types import GasParams, MixtureSpec, Model
from .virial import virial_density_pt

#: Relative tolerance on the mixture pressure solve.
MVO1_TOL = 1e-13

#: Iteration budget for the mixture pressure solve.
MVO1_MAX_ITER = 100


@dataclass(frozen=True)
class MnaCoefficients:
    """Mass-fraction-weighted Noble-Abel mixture coefficients."""

    R_mix: float    # J/(kg K)
    Cv_mix: float   # J/(kg K)
    q_mix: float    # J/kg
    b_mix: float    # m3/kg

    @property
    def W_mix(self):
        """Mixture molar mass, kg/mol."""
        return R_UNIVERSAL / self.R_mix


def mna_coefficients(mix: MixtureSpec) -> MnaCoefficients:
    """Weighted sums R_mix, Cv_mix, q_mix, b_mix over the components."""
    mix.uniform_model(Model.NA)
    pairs = mix.components
    return MnaCoefficients(
        R_mix=math.fsum(y * gas.R for gas, y in pairs),
        Cv_mix=math.fsum(y * gas.Cv for gas, y in pairs),
        q_mix=math.fsum(y * gas.q for gas, y in pairs),
        b_mix=math.fsum(y * gas.b for gas, y in pairs),
    )


def caloric_coefficients(mix: MixtureSpec):
    """(Cv_mix, q_mix) of a constant-Cv mixture, Noble-Abel or virial."""
    mix.uniform_model(Model.NA, Model.VO1)
    pairs = mix.components
    return (math.fsum(y * gas.Cv for gas, y in pairs),
            math.fsum(y * gas.q for gas, y in pairs))


class MnaState(NamedTuple):
    P: float   # Pa
    T: float   # K


def mna_pressure(mix: MixtureSpec, v_mix, e_mix) -> MnaState:
    """Mixture pressure and temperature from specific volume and energy.

        T = (e_mix - q_mix) / Cv_mix
        P = R_mix (e_mix - q_mix) / (Cv_mix (v_mix - b_mix))
    """
    coeffs = mna_coefficients(mix)
    if not e_mix > coeffs.q_mix:
        raise DomainError(
            f"mixture energy {e_mix!r} J/kg does not exceed the reference q_mix = {coeffs.q_mix!r}")
    if not v_mix > coeffs.b_mix:
        raise DomainError(
            f"mixture specific volume {v_mix!r} m3/kg does not exceed the mixture covolume {coeffs.b_mix!r}")
    T = (e_mix - coeffs.q_mix) / coeffs.Cv_mix
    P = coeffs.R_mix * (e_mix - coeffs.q_mix) / (coeffs.Cv_mix * (v_mix - coeffs.b_mix))
    return MnaState(P=P, T=T)


def mna_pressure_vt(mix: MixtureSpec, v_mix, T):
    """Mixture thermal law R_mix T / (v_mix - b_mix)."""
    coeffs = mna_coefficients(mix)
    if not T > 0.0:
        raise DomainError(f"temperature must be positive, got {T!r}")
    if not v_mix > coeffs.b_mix:
        raise DomainError(
            f"mixture specific volume {v_mix!r} m3/kg does not exceed the mixture covolume {coeffs.b_mix!r}")
    return coeffs.R_mix * T / (v_mix - coeffs.b_mix)


def mna_sound_speed(mix: MixtureSpec, P, v_mix):
    """Frozen mixture sound speed.

        c^2 = (1 + R_mix/Cv_mix) P v_mix / (1 - b_mix/v_mix)

    This is the form that collapses to the single-gas sound speed at
    N = 1 and to the ideal mixture value gamma_mix P v_mix at b_mix = 0.
    """
    coeffs = mna_coefficients(mix)
    if not P > 0.0:
        raise DomainError(f"pressure must be positive, got {P!r}")
    if not v_mix > coeffs.b_mix:
        raise DomainError(
            f"mixture specific volume {v_mix!r} m3/kg does not exceed the mixture covolume {coeffs.b_mix!r}")
    c2 = (1.0 + coeffs.R_mix / coeffs.Cv_mix) * P * v_mix / (1.0 - coeffs.b_mix / v_mix)
    return math.sqrt(c2)


def _require_positive_virials(mix: MixtureSpec):
    mix.uniform_model(Model.VO1)
    for gas, _ in mix.components:
        if not gas.a > 0.0:
            raise ValidationError(
                f"mixture pressure solve requires a > 0 for every component; {gas.name!r} has a = {gas.a!r}")


@dataclass(frozen=True)
class Mvo1Solution:
    """Solved mixture pressure with the component densities."""

    P: float                            # Pa
    T: float                            # K
    rho_components: tuple[float, ...]   # kg/m3, one per component
    iterations: int
    residual_rel: float                 # |sum Y_k/rho_k - v_mix| / v_mix


def mvo1_pressure(mix: MixtureSpec, rho_mix, T) -> Mvo1Solution:
    """Solve the implicit virial-mixture thermal law for the pressure.

    The mixture specific volume must equal the mass-weighted component
    volumes at the common (P, T):

        1/rho_mix = sum_k Y_k / rho_k(P, T)

    Each component volume decreases strictly in P, so the residual is
    monotone and a bracketing Newton solve always converges.  The bracket
    is [rho_mix min_k(R_k) T, rho_mix max_k(R_k) T (1 + max_k(a_k) rho_mix N)],
    widened by a small margin to absorb rounding at analytic endpoints.
    """
    _require_positive_virials(mix)
    if not (rho_mix > 0.0 and T > 0.0):
        raise DomainError(f"density and temperature must be positive, got rho={rho_mix!r}, T={T!r}")
    pairs = mix.components
    v_mix = 1.0 / rho_mix
    n = len(pairs)

    RTs = [gas.R * T for gas, _ in pairs]
    a_s = [gas.a for gas, _ in pairs]
    Ys = [y for _, y in pairs]

    def g(P):
        # sum of Y_k v_k(P) - v_mix, with v_k in the rationalized form
        # R_k T (1 + u_k) / (2 P), u_k = sqrt(1 + 4 a_k P / (R_k T))
        total = 0.0
        for RT, a, y in zip(RTs, a_s, Ys):
            u = math.sqrt(1.0 + 4.0 * a * P / RT)
            total += y * RT * (1.0 + u) / (2.0 * P)
        return total - v_mix

    def dg(P):
        total = 0.0
        for RT, a, y in zip(RTs, a_s, Ys):
            u = math.sqrt(1.0 + 4.0 * a * P / RT)
            total -= y * RT * (1.0 + u) ** 2 / (4.0 * u * P * P)
        return total

    R_min = min(gas.R for gas, _ in pairs)
    R_max = max(gas.R for gas, _ in pairs)
    a_max = max(a_s)
    P_lo = rho_mix * R_min * T * (1.0 - 1e-7)
    P_hi = rho_mix * R_max * T * (1.0 + a_max * rho_mix * n) * (1.0 + 1e-7)

    # cheap starting point: Noble-Abel-style closure with the virial
    # coefficients standing in for covolumes
    R_mix = math.fsum(y * gas.R for gas, y in pairs)
    a_mix = math.fsum(y * gas.a for gas, y in pairs)
    x0 = R_mix * T / (v_mix - a_mix) if v_mix > a_mix else P_hi

    result = solve_monotone(g, P_lo, P_hi, tol_rel=MVO1_TOL, max_iter=MVO1_MAX_ITER, dg=dg, x0=x0)
    P = result.root
    rho_components = tuple(virial_density_pt(gas.R, gas.a, P, T) for gas, _ in pairs)
    residual = abs(math.fsum(y / rho for y, rho in zip(Ys, rho_components)) - v_mix) / v_mix
    return Mvo1Solution(P=P, T=T, rho_components=rho_components,
                        iterations=result.iterations, residual_rel=residual)


def mvo1_pressure_from_energy(mix: MixtureSpec, rho_mix, e_mix) -> Mvo1Solution:
    """Mixture pressure from density and mixture internal energy."""
    Cv_mix, q_mix = caloric_coefficients(mix)
    if not e_mix > q_mix:
        raise DomainError(
            f"mixture energy {e_mix!r} J/kg does not exceed the reference q_mix = {q_mix!r}")
    return mvo1_pressure(mix, rho_mix, (e_mix - q_mix) / Cv_mix)


def mvo1_sound_speed(mix: MixtureSpec, P, T):
    """Frozen sound speed of the virial mixture at (P, T).

        c^2 = Cp_mix P / (Cv_mix rho_mix^2 sum_k Y_k (1+a_k rho_k) / (rho_k (1+2 a_k rho_k)))

    with the component densities at the common (P, T) and each Cp_k from
    the density-dependent Mayer relation at its own rho_k.  Collapses to
    the single-gas sound speed at N = 1.
    """
    _require_positive_virials(mix)
    if not (P > 0.0 and T > 0.0):
        raise DomainError(f"pressure and temperature must be positive, got P={P!r}, T={T!r}")
    pairs = mix.components
    cv_mix = math.fsum(y * gas.Cv for gas, y in pairs)
    cp_mix = 0.0
    vol_sum = 0.0   # sum Y_k / rho_k = 1/rho_mix
    series = 0.0
    for gas, y in pairs:
        rho_k = virial_density_pt(gas.R, gas.a, P, T)
        ar = gas.a * rho_k
        cp_mix += y * (gas.Cv + gas.R * (1.0 + ar) ** 2 / (1.0 + 2.0 * ar))
        vol_sum += y / rho_k
        series += y * (1.0 + ar) / (rho_k * (1.0 + 2.0 * ar))
    rho_mix = 1.0 / vol_sum
    c2 = cp_mix * P / (cv_mix * rho_mix * rho_mix * series)
    return math.sqrt(c2)


class MixtureFlame(NamedTuple):
    T_flame: float      # K
    e_s_eff_mix: float  # J/kg


def mixture_flame_temperature(mix: MixtureSpec) -> MixtureFlame:
    """Constant-volume flame state of the mixture.

    The mixture effective energy is the mass-weighted sum of the
    component effective energies; the flame temperature follows from the
    mixture caloric law.
    """
    mix.uniform_model(Model.NA, Model.VO1)
    for gas, _ in mix.components:
        if gas.e_s_eff is None:
            raise ValidationError(f"record {gas.name!r} carries no effective energy")
    e_mix = math.fsum(y * gas.e_s_eff for gas, y in mix.components)
    cv_mix = math.fsum(y * gas.Cv for gas, y in mix.components)
    return MixtureFlame(T_flame=e_mix / cv_mix, e_s_eff_mix=e_mix)
