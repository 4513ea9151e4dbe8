"""Command-line interface.

Human-facing units follow the usual closed-bomb tables: MPa, kJ/kg, K and
kg/m3.  Conversion to the library's SI internals happens here and nowhere
else.  All numeric output is printed with 10 significant digits, '.' as
the decimal separator and newline line endings, so identical inputs give
byte-identical output.

Exit codes: 0 success, 2 parse/validation, 3 numerical/convergence,
4 physical-domain violation.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .calibration import calibrate_cvt, calibrate_na, calibrate_vo1, predict_closed_bomb
from .errors import (
    BracketError,
    ConvergenceError,
    DegenerateDataError,
    DomainError,
    EosError,
    ModelMismatchError,
    NumericalError,
    ParseError,
    RankDeficiencyError,
    ValidationError,
)
from .materials import (
    INERT_GASES,
    MaterialDatabase,
    builtin_database,
    load_closed_bomb_csv,
    load_inert_runs_csv,
    load_material_db,
    save_material_db,
)
from .mixture import (
    mixture_flame_temperature,
    mna_pressure_vt,
    mna_sound_speed,
    mvo1_pressure,
    mvo1_sound_speed,
)
from .numerics import SCALE_RHO, SCALE_T, convexity_audit_fd, fd_partial, sound_speed_fd_oracle
from .state import state_from_P_T, state_from_rho_T, state_from_rho_e
from .types import GasParams, MixtureSpec, Model
from . import noble_abel, virial, virial_cvt

_MODEL_FLAGS = {"na": Model.NA, "vo1": Model.VO1, "vo1cvt": Model.VO1_CVT}

_ERROR_TABLE = (
    (ParseError, "E_PARSE", 2),
    (DegenerateDataError, "E_DEGENERATE", 2),
    (ModelMismatchError, "E_MODEL_MISMATCH", 2),
    (ValidationError, "E_VALIDATION", 2),
    (RankDeficiencyError, "E_RANK_DEFICIENT", 3),
    (BracketError, "E_BRACKET", 3),
    (ConvergenceError, "E_CONVERGENCE", 3),
    (NumericalError, "E_NUMERICAL", 3),
    (DomainError, "E_DOMAIN", 4),
)


def _fmt(x):
    return format(x, ".10g")


def _load_db(path):
    return builtin_database() if path is None else load_material_db(path)


def _require_convex_record(params):
    """Prediction commands refuse non-convex records; only `audit` probes them."""
    if params.model is not Model.NA and params.a < 0.0:
        raise ValidationError(
            f"record {params.name!r} has a negative virial coefficient; "
            "only the audit command accepts non-convex records")


def _parse_range(text):
    """LO:HI:STEP inclusive of HI when it lands on the grid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValidationError(f"range must be LO:HI:STEP, got {text!r}")
    lo, hi, step = (float(p) for p in parts)
    if step <= 0.0 or hi < lo:
        raise ValidationError(f"range needs step > 0 and hi >= lo, got {text!r}")
    values = []
    k = 0
    while True:
        x = lo + k * step
        if x > hi * (1.0 + 1e-12) + 1e-12:
            break
        values.append(x)
        k += 1
    return values


def _parse_float_list(text):
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ValidationError(f"expected a comma-separated list of numbers, got {text!r}") from None


def cmd_calibrate(args):
    points = load_closed_bomb_csv(args.points)
    if len(points) != 2:
        raise ValidationError(f"exactly two points required, got {len(points)}")
    name = args.name or "calibrated"
    fn = calibrate_na if args.model == "na" else calibrate_vo1
    params = fn(points[0], points[1], args.tflame, args.gamma, name=name)
    print(f"material {params.name} model {params.model}")
    print(f"Cv (J/kg/K) = {_fmt(params.Cv)}")
    print(f"R (J/kg/K) = {_fmt(params.R)}")
    print(f"e_s_eff (kJ/kg) = {_fmt(params.e_s_eff / 1e3)}")
    if params.model is Model.NA:
        print(f"b (m3/kg) = {_fmt(params.b)}")
    else:
        print(f"a (m3/kg) = {_fmt(params.a)}")
    print(f"T_flame (K) = {_fmt(params.T_flame)}")
    print(f"gamma = {_fmt(params.gamma_cal)}")
    print(f"rho_range (kg/m3) = {_fmt(params.rho_range[0])} {_fmt(params.rho_range[1])}")
    if args.db:
        try:
            db = load_material_db(args.db)
        except FileNotFoundError:
            db = MaterialDatabase.empty()
        db.add(params, note=f"calibrated from {args.points}")
        save_material_db(args.db, db)
        print(f"saved to {args.db}")
    return 0


def cmd_calibrate_cvt(args):
    runs = load_inert_runs_csv(args.runs)
    inert = INERT_GASES[args.inert]
    fit = calibrate_cvt(runs, inert, args.es_i * 1e3, T0=args.t0)
    print(f"runs = {len(runs)} inert = {inert.name}")
    print(f"Cv0 (J/kg/K) = {_fmt(fit.Cv0)}")
    print(f"c (J/kg/K2) = {_fmt(fit.c)}")
    print(f"q (kJ/kg) = {_fmt(fit.q / 1e3)}")
    print(f"residual norm (kJ/kg) = {_fmt(fit.residual_norm / 1e3)}")
    print(f"condition = {_fmt(fit.condition)}")
    if args.db:
        if not (args.name and args.base):
            raise ValidationError("--db requires --name and --base (a VO1 record supplying R, a)")
        if args.base_db is not None:
            base_source = load_material_db(args.base_db)
        else:
            try:
                base_source = load_material_db(args.db)
            except FileNotFoundError:
                base_source = builtin_database()
        base = base_source.get(args.base, Model.VO1)
        tflame = args.tflame if args.tflame is not None else base.T_flame
        if tflame is None:
            raise ValidationError("no flame temperature available; pass --tflame")
        params = GasParams.virial_cvt(
            args.name, R=base.R, a=base.a, Cv0=fit.Cv0, c=fit.c, q=fit.q,
            e_s_eff=fit.Cv0 * tflame + 0.5 * fit.c * tflame**2,
            T_flame=tflame, rho_range=base.rho_range)
        try:
            out_db = load_material_db(args.db)
        except FileNotFoundError:
            out_db = MaterialDatabase.empty()
        out_db.add(params, note=f"Cv(T) fit from {args.runs} with inert {inert.name}")
        save_material_db(args.db, out_db)
        print(f"saved to {args.db}")
    return 0


def cmd_sweep(args):
    db = _load_db(args.db)
    params = db.get(args.material, _MODEL_FLAGS[args.model])
    _require_convex_record(params)
    densities = _parse_range(args.rho)
    reference = {}
    if args.reference:
        for point in load_closed_bomb_csv(args.reference):
            reference[point.rho_load] = point.P_max

    header = "rho_kg_m3,tflame_K,pmax_MPa,extrapolated,c_m_s"
    if reference:
        header += ",pref_MPa"
    print(header)
    had_domain_error = False
    for rho in densities:
        try:
            pred = predict_closed_bomb(params, rho)
            st = state_from_rho_T(params, rho, pred.T_flame)
            row = [_fmt(rho), _fmt(pred.T_flame), _fmt(pred.P_max / 1e6),
                   "1" if pred.extrapolated else "0", _fmt(st.c)]
        except DomainError:
            had_domain_error = True
            row = [_fmt(rho), "", "", "E_DOMAIN", ""]
        if reference:
            match = [p for r, p in reference.items() if abs(r - rho) <= 1e-9 * max(1.0, rho)]
            row.append(_fmt(match[0] / 1e6) if match else "")
        print(",".join(row))
    return 4 if had_domain_error else 0


def _parse_mixture_spec(spec, sweep_arg):
    if "=" in spec:
        names, fractions = [], []
        for part in spec.split(","):
            name, _, value = part.partition("=")
            if not value:
                raise ValidationError(f"malformed mixture component {part!r}; use NAME=FRACTION")
            names.append(name.strip())
            fractions.append(float(value))
        return names, [fractions]
    names = [p.strip() for p in spec.split("+")]
    if len(names) != 2:
        raise ValidationError(f"fraction sweeps need exactly two materials as A+B, got {spec!r}")
    if sweep_arg is None:
        raise ValidationError("A+B mixture specs need --fraction-sweep LO:HI:STEP")
    ys = _parse_range(sweep_arg)
    for y in ys:
        if not 0.0 <= y <= 1.0:
            raise ValidationError(f"swept fraction {y!r} is outside [0,1]")
    return names, [[1.0 - y, y] for y in ys]


def cmd_mix_sweep(args):
    if not args.same_oxygen_balance:
        raise ValidationError(
            "mixture rules assume every component shares the oxygen-balance sign "
            "(no post-combustion between the product gases is modelled); "
            "pass --same-oxygen-balance to declare this holds")
    db = _load_db(args.db)
    model = Model.NA if args.model == "mna" else Model.VO1
    names, fraction_sets = _parse_mixture_spec(args.spec, args.fraction_sweep)
    gases = [db.get(name, model) for name in names]
    for gas in gases:
        _require_convex_record(gas)
    densities = _parse_float_list(args.rho)

    print("Y,rho_kg_m3,tflame_K,pmax_MPa,c_m_s")
    for fractions in fraction_sets:
        mix = MixtureSpec(tuple(zip(gases, fractions)), oxygen_balance_declared_uniform=True)
        flame = mixture_flame_temperature(mix)
        y_label = fractions[-1]
        for rho in densities:
            if args.model == "mna":
                P = mna_pressure_vt(mix, 1.0 / rho, flame.T_flame)
                c = mna_sound_speed(mix, P, 1.0 / rho)
            else:
                P = mvo1_pressure(mix, rho, flame.T_flame).P
                c = mvo1_sound_speed(mix, P, flame.T_flame)
            print(",".join([_fmt(y_label), _fmt(rho), _fmt(flame.T_flame), _fmt(P / 1e6), _fmt(c)]))
    return 0


def _audit_point(params, rho, T):
    """(maxwell_rel, analytic_c_rel, forms_rel, signs_match, healthy) at one point.

    States whose closed-form convexity criteria fail carry no meaningful
    sound speed, so the difference checks are skipped there and the state
    is reported as a convexity violation instead.
    """
    from .types import convexity_signs_ok

    model = params.model
    if model is Model.NA:
        e_fn = lambda r, t: noble_abel.na_energy(params, t)
        p_fn = lambda r, t: noble_abel.na_pressure_vt(params, 1.0 / r, t)
    elif model is Model.VO1:
        e_fn = lambda r, t: virial.vo1_energy(params, t)
        p_fn = lambda r, t: virial.vo1_pressure(params, r, t)
    else:
        e_fn = lambda r, t: virial_cvt.cvt_energy(params, t)
        p_fn = lambda r, t: virial_cvt.cvt_pressure(params, r, t)
    P = p_fn(rho, T)

    if model is Model.NA:
        closed = noble_abel.na_convexity(params, 1.0 / rho, P, T)
    elif model is Model.VO1:
        closed = virial.vo1_convexity(params, rho, P, T)
    else:
        closed = None
    if closed is not None and not (closed.convex and convexity_signs_ok(closed.criteria)):
        return 0.0, 0.0, 0.0, True, False

    # thermal/caloric compatibility residual, scaled to pressure
    dedrho = fd_partial(e_fn, (rho, T), 0, SCALE_RHO)
    dpdT = fd_partial(p_fn, (rho, T), 1, SCALE_T)
    maxwell_rel = abs(dedrho * rho * rho + T * dpdT - P) / P

    audit = convexity_audit_fd(e_fn, p_fn, rho, T)
    if closed is None and not audit.convex:
        return maxwell_rel, 0.0, 0.0, True, False

    oracle = sound_speed_fd_oracle(e_fn, p_fn, rho, T)
    forms_rel = oracle.rel_disagreement
    c_oracle = oracle.c2_energy**0.5
    if model is Model.NA:
        c_analytic = noble_abel.na_sound_speed(params, P, rho)
    elif model is Model.VO1:
        c_analytic = virial.vo1_sound_speed(params, P, rho)
    else:
        c_analytic = None
    analytic_rel = abs(c_analytic - c_oracle) / c_oracle if c_analytic is not None else 0.0

    if closed is not None:
        signs_match = audit.convex and all(
            (x > 0.0) == (y > 0.0)
            for x, y in zip(closed.criteria, audit.criteria))
    else:
        signs_match = audit.convex
    return maxwell_rel, analytic_rel, forms_rel, signs_match, True


def cmd_audit(args):
    db = _load_db(args.db)
    model = _MODEL_FLAGS[args.model]
    params = db.get(args.material, model)
    rhos = _parse_range(args.rho)
    temps = _parse_range(args.T)

    max_maxwell = max_analytic = max_forms = 0.0
    mismatches = 0
    violations = 0
    skipped = 0
    evaluated = 0
    for rho in rhos:
        if model is Model.NA and 1.0 / rho <= params.b * (1.0 + 1e-2):
            skipped += 1  # at or too near the covolume singularity
            continue
        for T in temps:
            m, a, f, ok, healthy = _audit_point(params, rho, T)
            evaluated += 1
            if not healthy:
                violations += 1
                continue
            max_maxwell = max(max_maxwell, m)
            max_analytic = max(max_analytic, a)
            max_forms = max(max_forms, f)
            if not ok:
                mismatches += 1

    checks = [
        ("maxwell max|res|/P", max_maxwell, 1e-8),
        ("sound-speed max|c_analytic - c_oracle|/c", max_analytic, 1e-5),
        ("oracle-forms max disagreement", max_forms, 1e-6),
    ]
    print(f"audit material={args.material} model={params.model}")
    print(f"grid rho={args.rho} T={args.T} points={evaluated} skipped_rho={skipped}")
    failed = False
    for label, value, limit in checks:
        ok = value <= limit
        failed |= not ok
        print(f"{label} = {_fmt(value)} limit {_fmt(limit)} {'PASS' if ok else 'FAIL'}")
    for label, count in (("convexity sign mismatches", mismatches),
                         ("convexity violations", violations)):
        ok = count == 0
        failed |= not ok
        print(f"{label} = {count} {'PASS' if ok else 'FAIL'}")
    print(f"RESULT {'FAIL' if failed else 'PASS'}")
    return 3 if failed else 0


def cmd_state(args):
    db = _load_db(args.db)
    params = db.get(args.material, _MODEL_FLAGS[args.model])
    _require_convex_record(params)
    given = {k: getattr(args, k) for k in ("rho", "T", "P", "e") if getattr(args, k) is not None}
    keys = frozenset(given)
    if keys == {"rho", "T"}:
        st = state_from_rho_T(params, args.rho, args.T)
    elif keys == {"P", "T"}:
        st = state_from_P_T(params, args.P * 1e6, args.T)
    elif keys == {"rho", "e"}:
        st = state_from_rho_e(params, args.rho, args.e * 1e3)
    else:
        raise ValidationError(
            "pass exactly one input pair: --rho with --T, --P with --T, or --rho with --e")
    print("P_MPa,T_K,rho_kg_m3,v_m3_kg,e_kJ_kg,h_kJ_kg,s_J_kgK,c_m_s,Cp_J_kgK,gamma")
    print(",".join([
        _fmt(st.P / 1e6), _fmt(st.T), _fmt(st.rho), _fmt(st.v),
        _fmt(st.e / 1e3), _fmt(st.h / 1e3),
        _fmt(st.s) if st.s is not None else "",
        _fmt(st.c), _fmt(st.Cp), _fmt(st.gamma),
    ]))
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="eos",
        description="Reduced equations of state for combustion gases: "
                    "calibration, state evaluation, sweeps and consistency audits.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("calibrate", help="two-point closed-bomb calibration")
    p.add_argument("model", choices=["na", "vo1"])
    p.add_argument("--points", required=True, help="CSV file rho_kg_m3,pmax_MPa with exactly two rows")
    p.add_argument("--tflame", type=float, required=True, help="flame temperature, K")
    p.add_argument("--gamma", type=float, required=True, help="heat-capacity ratio")
    p.add_argument("--name", help="material name for output and database")
    p.add_argument("--db", help="append the record to this database file")
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("calibrate-cvt", help="least-squares Cv(T) fit from inert-diluted runs")
    p.add_argument("--runs", required=True, help="CSV file Y,tflame_K")
    p.add_argument("--inert", choices=sorted(INERT_GASES), required=True)
    p.add_argument("--es-i", dest="es_i", type=float, required=True,
                   help="initial solid energy of the pure reactant, kJ/kg")
    p.add_argument("--t0", type=float, default=298.15, help="initial mixture temperature, K")
    p.add_argument("--db", help="write a VO1_CVT record to this database file")
    p.add_argument("--name", help="material name for the new record")
    p.add_argument("--base", help="existing VO1 material supplying R, a and the density range")
    p.add_argument("--base-db", dest="base_db", help="database holding --base (default: same as --db)")
    p.add_argument("--tflame", type=float, help="flame temperature for the record, K")
    p.set_defaults(func=cmd_calibrate_cvt)

    p = sub.add_parser("sweep", help="closed-bomb prediction over a density range")
    p.add_argument("material")
    p.add_argument("--model", choices=sorted(_MODEL_FLAGS), required=True)
    p.add_argument("--rho", required=True, help="density grid LO:HI:STEP, kg/m3")
    p.add_argument("--db", help="database file (default: built-in table)")
    p.add_argument("--reference", help="CSV rho_kg_m3,pmax_MPa of external reference pressures")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("mix-sweep", help="mixture closed-bomb predictions")
    p.add_argument("spec", help='mixture: "A+B" with --fraction-sweep, or "A=0.5,B=0.5"')
    p.add_argument("--model", choices=["mna", "mvo1"], required=True)
    p.add_argument("--rho", required=True, help="comma-separated loading densities, kg/m3")
    p.add_argument("--fraction-sweep", dest="fraction_sweep",
                   help="LO:HI:STEP mass-fraction sweep of the second material")
    p.add_argument("--same-oxygen-balance", dest="same_oxygen_balance", action="store_true",
                   help="declare that all components share the oxygen-balance sign")
    p.add_argument("--db", help="database file (default: built-in table)")
    p.set_defaults(func=cmd_mix_sweep)

    p = sub.add_parser("audit", help="grid consistency audit of one material record")
    p.add_argument("material")
    p.add_argument("--model", choices=sorted(_MODEL_FLAGS), required=True)
    p.add_argument("--rho", default="10:600:50", help="density grid LO:HI:STEP (default 10:600:50)")
    p.add_argument("--T", default="1500:4500:250", help="temperature grid LO:HI:STEP (default 1500:4500:250)")
    p.add_argument("--db", help="database file (default: built-in table)")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("state", help="full thermodynamic state at one point")
    p.add_argument("material")
    p.add_argument("--model", choices=sorted(_MODEL_FLAGS), required=True)
    p.add_argument("--rho", type=float, help="density, kg/m3")
    p.add_argument("--T", type=float, help="temperature, K")
    p.add_argument("--P", type=float, help="pressure, MPa")
    p.add_argument("--e", type=float, help="specific internal energy, kJ/kg")
    p.add_argument("--db", help="database file (default: built-in table)")
    p.set_defaults(func=cmd_state)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EosError as exc:
        for cls, prefix, code in _ERROR_TABLE:
            if isinstance(exc, cls):
                print(f"{prefix}: {exc}", file=sys.stderr)
                return code
        raise
    except FileNotFoundError as exc:
        print(f"E_PARSE: {exc}", file=sys.stderr)
        return 2


def entry():
    raise SystemExit(main())
