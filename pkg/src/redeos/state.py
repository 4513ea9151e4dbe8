"""Full consistent-state assembly for any of the three gas models.

Builders accept the three natural input pairs, (rho, T), (P, T) and
(rho, e), and return a :class:`~redeos.types.ThermoState`.  For the Cv(T)
virial variant there is no closed-form entropy or sound speed, so the
entropy field is left empty and the sound speed (with Cp and gamma) comes
from the finite-difference oracle.
"""

from __future__ import annotations

import math

from .numerics import sound_speed_fd_oracle
from .types import DEFAULT_ENTROPY_REF, GasParams, Model, ThermoState
from . import noble_abel, virial, virial_cvt


def _na_state(params, rho, T, ref):
    v = 1.0 / rho
    P = noble_abel.na_pressure_vt(params, v, T)
    return ThermoState(
        P=P, T=T, rho=rho, v=v,
        e=noble_abel.na_energy(params, T),
        h=noble_abel.na_enthalpy(params, P, T),
        s=noble_abel.na_entropy(params, P, T, ref),
        c=noble_abel.na_sound_speed(params, P, rho),
        Cp=noble_abel.na_cp(params),
        gamma=noble_abel.na_gamma(params),
    )


def _vo1_state(params, rho, T, ref):
    P = virial.vo1_pressure(params, rho, T)
    return ThermoState(
        P=P, T=T, rho=rho, v=1.0 / rho,
        e=virial.vo1_energy(params, T),
        h=params.Cv * T + P / rho + params.q,
        s=virial.vo1_entropy(params, P, T, ref) if params.a > 0.0 else None,
        c=virial.vo1_sound_speed(params, P, rho),
        Cp=virial.vo1_cp(params, rho),
        gamma=virial.vo1_gamma(params, rho),
    )


def _cvt_state(params, rho, T):
    P = virial_cvt.cvt_pressure(params, rho, T)
    oracle = sound_speed_fd_oracle(
        lambda r, t: virial_cvt.cvt_energy(params, t),
        lambda r, t: virial_cvt.cvt_pressure(params, r, t),
        rho, T)
    e = virial_cvt.cvt_energy(params, T)
    return ThermoState(
        P=P, T=T, rho=rho, v=1.0 / rho,
        e=e,
        h=e + P / rho,
        s=None,
        c=math.sqrt(oracle.c2_gamma),
        Cp=oracle.cp,
        gamma=oracle.cp / oracle.cv,
    )


def state_from_rho_T(params: GasParams, rho, T, ref=DEFAULT_ENTROPY_REF) -> ThermoState:
    """Consistent state from density and temperature."""
    if params.model is Model.NA:
        return _na_state(params, rho, T, ref)
    if params.model is Model.VO1:
        return _vo1_state(params, rho, T, ref)
    return _cvt_state(params, rho, T)


def state_from_P_T(params: GasParams, P, T, ref=DEFAULT_ENTROPY_REF) -> ThermoState:
    """Consistent state from pressure and temperature."""
    if params.model is Model.NA:
        rho = 1.0 / noble_abel.na_volume(params, P, T)
    elif params.model is Model.VO1:
        rho = virial.vo1_density(params, P, T)
    else:
        rho = virial_cvt.cvt_density(params, P, T)
    return state_from_rho_T(params, rho, T, ref)


def state_from_rho_e(params: GasParams, rho, e, ref=DEFAULT_ENTROPY_REF) -> ThermoState:
    """Consistent state from density and specific internal energy."""
    if params.model is Model.NA:
        T = noble_abel.na_temperature(params, e)
    elif params.model is Model.VO1:
        T = virial.vo1_temperature(params, e)
    else:
        T = virial_cvt.cvt_temperature(params, e)
    return state_from_rho_T(params, rho, T, ref)
