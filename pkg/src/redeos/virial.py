"""First-order virial equation of state with constant specific heat.

Thermal law P = rho R T (1 + a rho), compressibility factor Z = 1 + a rho,
caloric law e = Cv T + q.  The virial coefficient a is positive for
calibrated materials, which keeps the model convex at every density;
negative values are representable for convexity studies only.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import DomainError, NumericalError
from .types import (
    ConvexityReport,
    DEFAULT_ENTROPY_REF,
    EntropyReference,
    GasParams,
    Model,
    require_model,
)

def virial_pressure_rt(R, a, rho, T):
    """Raw thermal law rho R T (1 + a rho); shared by the Cv(T) variant."""
    return rho * R * T * (1.0 + a * rho)


def vo1_pressure(params: GasParams, rho, T):
    """Pressure from density and temperature: rho R T (1 + a rho)."""
    require_model(params, Model.VO1)
    if not (rho > 0.0 and T > 0.0):
        raise DomainError(f"density and temperature must be positive, got rho={rho!r}, T={T!r}")
    return virial_pressure_rt(params.R, params.a, rho, T)


def virial_density_pt(R, a, P, T):
    """Positive density root of the quadratic thermal law at (P, T).

    The textbook root (-1 + sqrt(1 + 4aP/RT)) / (2a) cancels badly for
    small 4aP/RT; the rationalized equivalent below is free of subtraction
    for any a >= 0 and degenerates exactly to P/(RT) at a = 0.
    """
    x = 4.0 * a * P / (R * T)
    if 1.0 + x < 0.0:
        raise NumericalError(f"density root discriminant is negative (4aP/RT = {x!r})")
    return 2.0 * P / (R * T * (1.0 + math.sqrt(1.0 + x)))


def vo1_density(params: GasParams, P, T):
    """Density from pressure and temperature (inverse of the thermal law)."""
    require_model(params, Model.VO1)
    if not (P > 0.0 and T > 0.0):
        raise DomainError(f"pressure and temperature must be positive, got P={P!r}, T={T!r}")
    return virial_density_pt(params.R, params.a, P, T)


def vo1_energy(params: GasParams, T):
    """Specific internal energy Cv T + q."""
    require_model(params, Model.VO1)
    if not T > 0.0:
        raise DomainError(f"temperature must be positive, got {T!r}")
    return params.Cv * T + params.q


def vo1_temperature(params: GasParams, e):
    """Temperature from specific internal energy, (e - q) / Cv."""
    require_model(params, Model.VO1)
    if not e > params.q:
        raise DomainError(f"internal energy {e!r} J/kg does not exceed the reference q = {params.q!r}")
    return (e - params.q) / params.Cv


def vo1_pressure_from_energy(params: GasParams, rho, e):
    """Pressure from density and internal energy, rho R (e - q)(1 + a rho) / Cv."""
    return vo1_pressure(params, rho, vo1_temperature(params, e))


def vo1_cp(params: GasParams, rho):
    """Constant-pressure specific heat, Cv + R (1 + a rho)^2 / (1 + 2 a rho).

    State dependent: the Mayer relation picks up the compressibility
    correction, so Cp varies with density unlike the Noble-Abel case.
    """
    require_model(params, Model.VO1)
    ar = params.a * rho
    return params.Cv + params.R * (1.0 + ar) ** 2 / (1.0 + 2.0 * ar)


def vo1_gamma(params: GasParams, rho):
    """Density-dependent heat-capacity ratio Cp / Cv."""
    return vo1_cp(params, rho) / params.Cv


def vo1_sound_speed(params: GasParams, P, rho):
    """Frozen sound speed at (P, rho)."""
    require_model(params, Model.VO1)
    if not (P > 0.0 and rho > 0.0):
        raise DomainError(f"pressure and density must be positive, got P={P!r}, rho={rho!r}")
    ar = params.a * rho
    c2 = (P / rho) * ((params.R / params.Cv) * (1.0 + ar) + (1.0 + 2.0 * ar) / (1.0 + ar))
    if not c2 > 0.0:
        raise DomainError(f"squared sound speed is not positive at rho={rho!r} (a rho = {ar!r})")
    return math.sqrt(c2)


class Vo1Derived(NamedTuple):
    rho: float
    h: float
    Cp: float
    gamma: float
    c: float


def vo1_derived(params: GasParams, P, T) -> Vo1Derived:
    """Density, enthalpy, Cp, gamma and sound speed at (P, T)."""
    rho = vo1_density(params, P, T)
    return Vo1Derived(
        rho=rho,
        h=params.Cv * T + P / rho + params.q,
        Cp=vo1_cp(params, rho),
        gamma=vo1_gamma(params, rho),
        c=vo1_sound_speed(params, P, rho),
    )


def vo1_entropy(params: GasParams, P, T, ref: EntropyReference = DEFAULT_ENTROPY_REF):
    """Specific entropy at (P, T).

    Written as the exact difference between the state and the reference,

        s = s0 + Cv ln(T/T0) - (R/2) [ (u - u0) + 2 ln( (u-1)/(u0-1) ) ]

    with u = sqrt(1 + 4 a P / (R T)).  Both bracketed terms are
    rearranged so no subtractive cancellation occurs for small a, and
    s(P0, T0) = s0 holds exactly.  The closed form is singular at a = 0;
    for an ideal gas use the Noble-Abel kernel with b = 0.
    """
    require_model(params, Model.VO1)
    if params.a <= 0.0:
        raise DomainError(
            "the virial entropy form requires a > 0; use the Noble-Abel kernel with b = 0 instead")
    if not (P > 0.0 and T > 0.0):
        raise DomainError(f"pressure and temperature must be positive, got P={P!r}, T={T!r}")
    P0, T0, s0 = ref
    R, Cv, a = params.R, params.Cv, params.a
    x = 4.0 * a * P / (R * T)
    x0 = 4.0 * a * P0 / (R * T0)
    u = math.sqrt(1.0 + x)
    u0 = math.sqrt(1.0 + x0)
    du = (x - x0) / (u + u0)
    # (u - 1)/(u0 - 1) = (x/x0) (1 + u0)/(1 + u), free of cancellation
    log_ratio = math.log((P * T0) / (P0 * T) * (1.0 + u0) / (1.0 + u))
    return s0 + Cv * math.log(T / T0) - 0.5 * R * (du + 2.0 * log_ratio)


def vo1_entropy_dP(params: GasParams, P, T):
    """Closed-form isothermal pressure derivative of the entropy.

    Equals -R (1 + u)^2 / (4 P u) with u = sqrt(1 + 4 a P / (R T)); the
    rationalized equivalent of differentiating the entropy expression,
    stable for small a and reducing to -R/P in the ideal-gas limit.
    """
    require_model(params, Model.VO1)
    if not (P > 0.0 and T > 0.0):
        raise DomainError(f"pressure and temperature must be positive, got P={P!r}, T={T!r}")
    u = math.sqrt(1.0 + 4.0 * params.a * P / (params.R * T))
    return -params.R * (1.0 + u) ** 2 / (4.0 * P * u)


def _div(num, den):
    if den != 0.0:
        return num / den
    if num == 0.0:
        return math.nan
    return math.copysign(math.inf, num)


def vo1_convexity(params: GasParams, rho, P, T) -> ConvexityReport:
    """Convexity verdict plus the four criterion values at (rho, P, T).

    Convex exactly when a > -1/rho, always satisfied for a >= 0.  The
    criterion values use the caller-supplied (P, T) so constructed
    negative-a records can be probed past the a rho = -1 boundary.
    """
    require_model(params, Model.VO1)
    if not rho > 0.0:
        raise DomainError(f"density must be positive, got {rho!r}")
    R, Cv, a = params.R, params.Cv, params.a
    ar = a * rho
    criteria = (
        rho * P * ((R / Cv) * (1.0 + ar) + _div(1.0 + 2.0 * ar, 1.0 + ar)),  # rho^2 c^2
        _div(P, rho * R * Cv * (1.0 + ar)),
        -P / Cv,
        _div(P * P * (1.0 + 2.0 * ar), R * Cv * (1.0 + ar) ** 2),
    )
    return ConvexityReport(convex=ar > -1.0, criteria=criteria)
