"""Material database and file ingestion.

Database format: a line-oriented sectioned text file.  Records start with
a header line

    [material "NAME" model MODEL]

with MODEL one of NA, VO1 or VO1_CVT, followed by ``key = value`` lines.
Blank lines and lines starting with ``#`` are ignored.  Keys carry the
file units: R and Cv in J/(kg K), covolume b and virial coefficient a in
m3/kg, energies in kJ/kg (keys ``q_kJ`` and ``e_s_eff_kJ``), temperatures
in K, ``rho_range`` as two space-separated densities in kg/m3, and a
free-text ``note`` for provenance.

Closed-bomb CSV format: header ``rho_kg_m3,pmax_MPa`` and one point per
line.  Inert-run CSV format: header ``Y,tflame_K``.
"""

from __future__ import annotations

import importlib.resources
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .constants import R_UNIVERSAL
from .errors import ParseError, ValidationError
from .types import ClosedBombPoint, GasParams, InertGasParams, InertRunRecord, Model

#: Noble inert species usable in Cv(T) calibration runs.  Argon's heat
#: capacity follows the usual monatomic tabulations; xenon is derived
#: from the monatomic relation Cv = (3/2) R_universal / W.
INERT_GASES = {
    "argon": InertGasParams("argon", Cv_in=312.2, W_in=39.95),
    "xenon": InertGasParams("xenon", Cv_in=1.5 * R_UNIVERSAL / 0.131293, W_in=131.293),
}

_HEADER_RE = re.compile(r'^\[material\s+"([^"]+)"\s+model\s+(\S+)\]$')

_COMMON_KEYS = ("R", "q_kJ", "e_s_eff_kJ", "T_flame", "gamma", "rho_range", "note")
_MODEL_KEYS = {
    Model.NA: ("b", "Cv") + _COMMON_KEYS,
    Model.VO1: ("a", "Cv") + _COMMON_KEYS,
    Model.VO1_CVT: ("a", "Cv0", "c") + _COMMON_KEYS,
}


class DbRecord(NamedTuple):
    params: GasParams
    note: str


@dataclass
class MaterialDatabase:
    """Map from (material name, model) to a parameter record."""

    records: dict[tuple[str, Model], DbRecord]

    @classmethod
    def empty(cls):
        return cls(records={})

    def add(self, params: GasParams, note: str = ""):
        key = (params.name, params.model)
        self.records[key] = DbRecord(params=params, note=note)

    def get(self, name: str, model: Model) -> GasParams:
        try:
            return self.records[(name, Model(model))].params
        except KeyError:
            raise ValidationError(f"material {name!r} with model {model} is not in the database") from None

    def __contains__(self, key):
        name, model = key
        return (name, Model(model)) in self.records

    def __len__(self):
        return len(self.records)

    def names(self):
        return sorted({name for name, _ in self.records})


def _record_from_fields(name, model, fields, lineno):
    def take(key, default=None):
        return fields.pop(key, default)

    kJ = 1e3
    note = take("note", "")
    kwargs = dict(
        q=float(take("q_kJ", 0.0)) * kJ,
        e_s_eff=None, T_flame=None, gamma_cal=None, rho_range=None,
    )
    if (es := take("e_s_eff_kJ")) is not None:
        kwargs["e_s_eff"] = float(es) * kJ
    if (tf := take("T_flame")) is not None:
        kwargs["T_flame"] = float(tf)
    if (ga := take("gamma")) is not None:
        kwargs["gamma_cal"] = float(ga)
    if (rr := take("rho_range")) is not None:
        parts = rr.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: rho_range needs two values, got {rr!r}")
        kwargs["rho_range"] = (float(parts[0]), float(parts[1]))

    try:
        if model is Model.NA:
            params = GasParams.noble_abel(name, R=float(fields.pop("R")),
                                          b=float(fields.pop("b")), Cv=float(fields.pop("Cv")), **kwargs)
        elif model is Model.VO1:
            params = GasParams.virial(name, R=float(fields.pop("R")),
                                      a=float(fields.pop("a")), Cv=float(fields.pop("Cv")), **kwargs)
        else:
            params = GasParams.virial_cvt(name, R=float(fields.pop("R")), a=float(fields.pop("a")),
                                          Cv0=float(fields.pop("Cv0")), c=float(fields.pop("c")), **kwargs)
    except KeyError as exc:
        raise ParseError(f"record {name!r} ({model}) is missing key {exc.args[0]!r}") from None
    if fields:
        raise ParseError(f"record {name!r} ({model}) has leftover keys: {sorted(fields)}")
    return DbRecord(params=params, note=note)


def load_material_db(path) -> MaterialDatabase:
    with open(path, "r", encoding="utf-8") as fh:
        return _parse_material_db(fh.read().splitlines())


def _parse_material_db(lines: Iterable[str]) -> MaterialDatabase:
    db = MaterialDatabase.empty()
    name = model = None
    fields: dict[str, str] = {}
    start_line = 0

    def flush():
        if name is None:
            return
        record = _record_from_fields(name, model, dict(fields), start_line)
        key = (name, model)
        if key in db.records:
            raise ParseError(f"duplicate record for material {name!r} model {model}")
        db.records[key] = record

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            m = _HEADER_RE.match(line)
            if not m:
                raise ParseError(f"line {lineno}: malformed section header {line!r}")
            flush()
            name = m.group(1)
            try:
                model = Model(m.group(2))
            except ValueError:
                raise ParseError(f"line {lineno}: unknown model {m.group(2)!r}") from None
            fields = {}
            start_line = lineno
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected 'key = value', got {line!r}")
        if name is None:
            raise ParseError(f"line {lineno}: key outside any [material ...] section")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _MODEL_KEYS[model]:
            raise ParseError(f"line {lineno}: unknown key {key!r} for model {model}")
        if key in fields:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        if key != "note" and key != "rho_range":
            try:
                float(value)
            except ValueError:
                raise ParseError(f"line {lineno}: value of {key!r} is not a number: {value!r}") from None
        fields[key] = value
    flush()
    return db


def save_material_db(path, db: MaterialDatabase):
    """Write the database; load(save(load(x))) reproduces the records."""
    lines = []
    for (name, model) in sorted(db.records, key=lambda k: (k[0], k[1].value)):
        record = db.records[(name, model)]
        p = record.params
        lines.append(f'[material "{name}" model {model}]')
        lines.append(f"R = {p.R!r}")
        if model is Model.NA:
            lines.append(f"b = {p.b!r}")
            lines.append(f"Cv = {p.Cv!r}")
        elif model is Model.VO1:
            lines.append(f"a = {p.a!r}")
            lines.append(f"Cv = {p.Cv!r}")
        else:
            lines.append(f"a = {p.a!r}")
            lines.append(f"Cv0 = {p.Cv0!r}")
            lines.append(f"c = {p.c!r}")
        lines.append(f"q_kJ = {p.q / 1e3!r}")
        if p.e_s_eff is not None:
            lines.append(f"e_s_eff_kJ = {p.e_s_eff / 1e3!r}")
        if p.T_flame is not None:
            lines.append(f"T_flame = {p.T_flame!r}")
        if p.gamma_cal is not None:
            lines.append(f"gamma = {p.gamma_cal!r}")
        if p.rho_range is not None:
            lines.append(f"rho_range = {p.rho_range[0]!r} {p.rho_range[1]!r}")
        if record.note:
            lines.append(f"note = {record.note}")
        lines.append("")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines))


_BUILTIN_CACHE: MaterialDatabase | None = None


def builtin_database() -> MaterialDatabase:
    """Packaged database of calibrated materials."""
    global _BUILTIN_CACHE
    if _BUILTIN_CACHE is None:
        text = importlib.resources.files("redeos").joinpath("data/materials.eosdb").read_text("utf-8")
        _BUILTIN_CACHE = _parse_material_db(text.splitlines())
    return _BUILTIN_CACHE


def _parse_csv_rows(path, header: str, n_fields: int):
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    rows = []
    seen_header = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not seen_header:
            if line.replace(" ", "") != header:
                raise ParseError(f"line {lineno}: expected header {header!r}, got {line!r}")
            seen_header = True
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != n_fields:
            raise ParseError(f"line {lineno}: expected {n_fields} fields, got {len(parts)}")
        values = []
        for col, part in enumerate(parts, start=1):
            try:
                values.append(float(part))
            except ValueError:
                raise ParseError(f"line {lineno}, column {col}: not a number: {part!r}") from None
        rows.append((lineno, values))
    if not rows:
        raise ParseError(f"{path}: no data rows")
    return rows


def load_closed_bomb_csv(path) -> list[ClosedBombPoint]:
    """Closed-bomb points from a ``rho_kg_m3,pmax_MPa`` CSV file."""
    points = []
    for lineno, (rho, pmax_mpa) in _parse_csv_rows(path, "rho_kg_m3,pmax_MPa", 2):
        if rho <= 0.0:
            raise ValidationError(f"line {lineno}: loading density must be positive, got {rho!r}")
        if pmax_mpa <= 0.0:
            raise ValidationError(f"line {lineno}: peak pressure must be positive, got {pmax_mpa!r}")
        points.append(ClosedBombPoint(rho_load=rho, P_max=pmax_mpa * 1e6))
    return points


def load_inert_runs_csv(path) -> list[InertRunRecord]:
    """Inert-diluted runs from a ``Y,tflame_K`` CSV file."""
    runs = []
    for lineno, (y, tflame) in _parse_csv_rows(path, "Y,tflame_K", 2):
        if not 0.0 < y <= 1.0:
            raise ValidationError(f"line {lineno}: mass fraction must lie in (0,1], got {y!r}")
        if tflame <= 0.0:
            raise ValidationError(f"line {lineno}: flame temperature must be positive, got {tflame!r}")
        runs.append(InertRunRecord(Y=y, T_flame=tflame))
    return runs
