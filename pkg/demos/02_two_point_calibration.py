"""Calibrate gas-product parameters from two closed-bomb points.

Two (loading density, peak pressure) pairs, plus a flame temperature and
heat-capacity ratio from thermochemical equilibrium computations, pin all
parameters of either reduced model.  Measured peak pressures already
contain wall heat losses, so the recovered effective energy is the energy
actually delivered to the gas.
"""

import redeos as rx

# (rho1, P1), (rho2, P2) in kg/m3 and MPa; T_flame in K; gamma
CLOSED_BOMB = {
    "NC-13": ((100.0, 130.3), (150.0, 214.1), 3275.0, 1.207),
    "RDX": ((100.0, 163.4), (150.0, 267.6), 4040.0, 1.211),
    "NG": ((100.0, 131.6), (150.0, 215.1), 3991.0, 1.180),
    "HMX": ((100.0, 162.3), (150.0, 265.7), 4012.0, 1.211),
}

print("Two-point calibrations, density range 100-150 kg/m3")
print(f"{'material':10s}{'model':6s}{'Cv':>10s}{'R':>9s}{'e_s_eff':>10s}{'b | a':>12s}")
print(f"{'':10s}{'':6s}{'J/kg/K':>10s}{'J/kg/K':>9s}{'kJ/kg':>10s}{'m3/kg':>12s}")
for name, ((r1, p1), (r2, p2), tflame, gamma) in CLOSED_BOMB.items():
    pt1 = rx.ClosedBombPoint(r1, p1 * 1e6)
    pt2 = rx.ClosedBombPoint(r2, p2 * 1e6)
    na = rx.calibrate_na(pt1, pt2, tflame, gamma, name=name)
    vo1 = rx.calibrate_vo1(pt1, pt2, tflame, gamma, name=name)
    print(f"{name:10s}{'NA':6s}{na.Cv:10.1f}{na.R:9.1f}{na.e_s_eff / 1e3:10.1f}{na.b:12.6f}")
    print(f"{'':10s}{'VO1':6s}{vo1.Cv:10.1f}{vo1.R:9.1f}{vo1.e_s_eff / 1e3:10.1f}{vo1.a:12.6f}")

print()
print("The two-point system is interpolatory: predictions at the input")
print("densities give back the measured pressures.")
pt1 = rx.ClosedBombPoint(100.0, 130.3e6)
pt2 = rx.ClosedBombPoint(150.0, 214.1e6)
params = rx.calibrate_vo1(pt1, pt2, 3275.0, 1.207, name="NC-13")
for point in (pt1, pt2):
    pred = rx.predict_closed_bomb(params, point.rho_load)
    print(f"  rho = {point.rho_load:5.0f} kg/m3: predicted {pred.P_max / 1e6:7.2f} MPa, "
          f"measured {point.P_max / 1e6:7.2f} MPa")

print()
print("Degenerate inputs are refused:")
try:
    rx.calibrate_na(pt1, pt1, 3275.0, 1.207)
except rx.DegenerateDataError as exc:
    print(f"  identical points     -> {exc}")
ideal1 = rx.ClosedBombPoint(100.0, 100.0 * 340.0 * 3300.0)
ideal2 = rx.ClosedBombPoint(150.0, 150.0 * 340.0 * 3300.0)
try:
    rx.calibrate_vo1(ideal1, ideal2, 3300.0, 1.2)
except rx.ValidationError as exc:
    print(f"  exact ideal-gas data -> {exc}")
