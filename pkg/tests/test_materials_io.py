import pytest

import redeos as rx
from redeos.errors import ParseError, ValidationError


class TestClosedBombCsv:
    def test_two_points(self, tmp_path):
        path = tmp_path / "points.csv"
        path.write_text("rho_kg_m3,pmax_MPa\n100,130.3\n150,214.1\n")
        points = rx.load_closed_bomb_csv(path)
        assert len(points) == 2
        assert points[0].rho_load == 100.0
        assert points[0].P_max == pytest.approx(130.3e6)
        assert points[1].P_max == pytest.approx(214.1e6)

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("")
        with pytest.raises(ParseError, match="no data rows"):
            rx.load_closed_bomb_csv(path)

    def test_header_only(self, tmp_path):
        path = tmp_path / "bare.csv"
        path.write_text("rho_kg_m3,pmax_MPa\n")
        with pytest.raises(ParseError, match="no data rows"):
            rx.load_closed_bomb_csv(path)

    def test_wrong_header(self, tmp_path):
        path = tmp_path / "odd.csv"
        path.write_text("density,pressure\n100,130.3\n")
        with pytest.raises(ParseError, match="header"):
            rx.load_closed_bomb_csv(path)

    def test_negative_value_reports_line(self, tmp_path):
        path = tmp_path / "neg.csv"
        path.write_text("rho_kg_m3,pmax_MPa\n100,-5\n")
        with pytest.raises(ValidationError, match="line 2"):
            rx.load_closed_bomb_csv(path)

    def test_non_numeric_reports_line_and_column(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("rho_kg_m3,pmax_MPa\n100,130.3\n150,fast\n")
        with pytest.raises(ParseError, match="line 3, column 2"):
            rx.load_closed_bomb_csv(path)


class TestInertRunsCsv:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "runs.csv"
        path.write_text("Y,tflame_K\n0.5,2500\n0.75,2900\n1.0,3275\n")
        runs = rx.load_inert_runs_csv(path)
        assert [r.Y for r in runs] == [0.5, 0.75, 1.0]
        assert runs[2].T_flame == 3275.0

    def test_fraction_bounds(self, tmp_path):
        path = tmp_path / "runs.csv"
        path.write_text("Y,tflame_K\n1.5,2500\n")
        with pytest.raises(ValidationError, match="line 2"):
            rx.load_inert_runs_csv(path)


class TestMaterialDatabase:
    def test_builtin_contents(self, db):
        assert len(db) == 9
        assert db.names() == ["HMX", "NC-13", "NG", "RDX"]
        for name in db.names():
            assert (name, rx.Model.NA) in db
            assert (name, rx.Model.VO1) in db
        assert ("NC-13", rx.Model.VO1_CVT) in db

    def test_missing_record(self, db):
        with pytest.raises(ValidationError, match="not in the database"):
            db.get("TNT", rx.Model.NA)

    def test_save_load_round_trip(self, db, tmp_path):
        path = tmp_path / "copy.eosdb"
        rx.save_material_db(path, db)
        again = rx.load_material_db(path)
        assert set(again.records) == set(db.records)
        for key, record in db.records.items():
            assert again.records[key].params == record.params
            assert again.records[key].note == record.note
        # a second cycle must be byte-stable
        path2 = tmp_path / "copy2.eosdb"
        rx.save_material_db(path2, again)
        assert path.read_text() == path2.read_text()

    def test_unknown_key_named(self, tmp_path):
        path = tmp_path / "odd.eosdb"
        path.write_text('[material "X" model NA]\nR = 300\nb = 0.001\nCv = 1500\nzeta = 4\n')
        with pytest.raises(ParseError, match="zeta"):
            rx.load_material_db(path)

    def test_missing_required_key(self, tmp_path):
        path = tmp_path / "odd.eosdb"
        path.write_text('[material "X" model NA]\nR = 300\nCv = 1500\n')
        with pytest.raises(ParseError, match="'b'"):
            rx.load_material_db(path)

    def test_duplicate_record(self, tmp_path):
        block = '[material "X" model NA]\nR = 300\nb = 0.001\nCv = 1500\n'
        path = tmp_path / "dup.eosdb"
        path.write_text(block + block)
        with pytest.raises(ParseError, match="duplicate"):
            rx.load_material_db(path)

    def test_malformed_header(self, tmp_path):
        path = tmp_path / "odd.eosdb"
        path.write_text("[material X model NA]\nR = 300\n")
        with pytest.raises(ParseError, match="header"):
            rx.load_material_db(path)

    def test_unknown_model(self, tmp_path):
        path = tmp_path / "odd.eosdb"
        path.write_text('[material "X" model BKW]\nR = 300\n')
        with pytest.raises(ParseError, match="BKW"):
            rx.load_material_db(path)

    def test_negative_virial_loads_for_auditing(self, tmp_path):
        # probing records are representable; prediction commands refuse them
        path = tmp_path / "neg.eosdb"
        path.write_text('[material "X" model VO1]\nR = 300\na = -0.002\nCv = 1500\n')
        assert rx.load_material_db(path).get("X", rx.Model.VO1).a == -0.002

    def test_record_invariants_enforced_on_load(self, tmp_path):
        path = tmp_path / "bad.eosdb"
        path.write_text('[material "X" model NA]\nR = -300\nb = 0.001\nCv = 1500\n')
        with pytest.raises(ValidationError):
            rx.load_material_db(path)


class TestInertTable:
    def test_argon_matches_published_values(self):
        argon = rx.INERT_GASES["argon"]
        assert argon.Cv_in == 312.2
        assert argon.W_in == 39.95
        assert argon.noble

    def test_xenon_monatomic_relation(self):
        xenon = rx.INERT_GASES["xenon"]
        assert xenon.Cv_in == pytest.approx(1.5 * xenon.R_in, rel=1e-12)
