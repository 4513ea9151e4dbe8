import pytest
from hypothesis import HealthCheck, settings

import redeos as rx

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


# Two-point closed-bomb fixtures: (rho1, Pmax1), (rho2, Pmax2), T_flame, gamma.
# RDX's published gamma of 1.214 is inconsistent with its own published
# parameter set (which implies 1.211 through both Mayer relations); 1.211
# reproduces the tabulated Cv and e_s_eff.
CLOSED_BOMB_RUNS = {
    "NC-13": ((100.0, 130.3e6), (150.0, 214.1e6), 3275.0, 1.207),
    "RDX": ((100.0, 163.4e6), (150.0, 267.6e6), 4040.0, 1.211),
    "NG": ((100.0, 131.6e6), (150.0, 215.1e6), 3991.0, 1.180),
    "HMX": ((100.0, 162.3e6), (150.0, 265.7e6), 4012.0, 1.211),
}

# Published parameter table the calibrations must reproduce:
# material -> model -> (Cv, R, e_s_eff kJ/kg, b or a).
PUBLISHED_PARAMS = {
    "NC-13": {"NA": (1637.1, 338.9, 5360.7, 0.001484), "VO1": (1640.5, 322.0, 5371.9, 0.002359)},
    "RDX": {"NA": (1640.9, 346.2, 6629.3, 0.001440), "VO1": (1644.1, 330.2, 6642.1, 0.002249)},
    "NG": {"NA": (1573.1, 283.2, 6277.9, 0.001413), "VO1": (1576.0, 270.6, 6289.5, 0.002185)},
    "HMX": {"NA": (1642.0, 346.5, 6588.5, 0.001435), "VO1": (1645.2, 330.6, 6601.1, 0.002237)},
}


def closed_bomb_points(name):
    (r1, p1), (r2, p2), tflame, gamma = CLOSED_BOMB_RUNS[name]
    return rx.ClosedBombPoint(r1, p1), rx.ClosedBombPoint(r2, p2), tflame, gamma


@pytest.fixture(scope="session")
def db():
    return rx.builtin_database()


@pytest.fixture(scope="session")
def nc13_na(db):
    return db.get("NC-13", rx.Model.NA)


@pytest.fixture(scope="session")
def nc13_vo1(db):
    return db.get("NC-13", rx.Model.VO1)


@pytest.fixture(scope="session")
def nc13_cvt(db):
    return db.get("NC-13", rx.Model.VO1_CVT)


@pytest.fixture(scope="session")
def rdx_na(db):
    return db.get("RDX", rx.Model.NA)


@pytest.fixture(scope="session")
def rdx_vo1(db):
    return db.get("RDX", rx.Model.VO1)


@pytest.fixture(scope="session")
def calibrated():
    """Freshly calibrated records for all four materials and both models."""
    out = {}
    for name in CLOSED_BOMB_RUNS:
        p1, p2, tflame, gamma = closed_bomb_points(name)
        out[(name, "NA")] = rx.calibrate_na(p1, p2, tflame, gamma, name=name)
        out[(name, "VO1")] = rx.calibrate_vo1(p1, p2, tflame, gamma, name=name)
    return out


def write_dilution_runs_csv(path):
    """Argon-dilution fixture regenerated from the published Cv(T) parameters.

    The reference constant is anchored so the energy vanishes at the
    reference temperature; returns the pure-reactant initial energy in
    J/kg, consistent with the generated flame temperatures.
    """
    argon = rx.INERT_GASES["argon"]
    t0 = 298.15
    q = -(1416.8 * t0 + 0.5 * 0.0637 * t0 * t0)
    params = rx.GasParams.virial_cvt("NC-13", R=322.0, a=0.002359, Cv0=1416.8, c=0.0637, q=q)
    e_s_i = rx.cvt_energy(params, 3275.0)
    lines = ["Y,tflame_K"]
    for k in range(35):
        y = 0.15 + 0.025 * k
        t = rx.dilution_flame_temperature(params, argon, y, e_s_i)
        lines.append(f"{y:.10g},{t:.10g}")
    path.write_text("\n".join(lines) + "\n")
    return e_s_i
