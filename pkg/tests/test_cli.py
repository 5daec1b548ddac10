import csv
import io
import json
import subprocess
import sys

import pytest

from wreathstat import formulas as F
from wreathstat.cli import OutputRecord, main
from wreathstat.perm import GroupSpec
from wreathstat.polyring import MPoly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestPoly:
    def test_theorem_text(self, capsys):
        assert run(capsys, "poly", "--r", "1", "--s", "1", "--m", "2", "--n", "3",
                   "--method", "theorem") == (0, "3*u*v + u^3\n", "")

    def test_oracle_d2(self, capsys):
        assert run(capsys, "poly", "--r", "2", "--s", "2", "--m", "2", "--n", "1",
                   "--method", "oracle")[1] == "u\n"

    def test_identity_only(self, capsys):
        assert run(capsys, "poly", "--r", "2", "--s", "1", "--m", "1", "--n", "4")[1] == "u^4\n"

    @pytest.mark.parametrize("method", ["oracle", "theorem", "recurrence", "closed-m2", "corollary"])
    def test_methods_agree(self, capsys, method):
        code, out, _ = run(capsys, "poly", "--r", "4", "--s", "4", "--m", "2", "--n", "4",
                           "--method", method, "--format", "json")
        assert code == 0
        rec = json.loads(out)
        assert rec["method"] == method
        assert OutputRecord.from_dict(rec).to_poly() == F.h_poly(4, 4, 2, 4)

    def test_json_schema(self, capsys):
        _, out, _ = run(capsys, "poly", "--r", "2", "--s", "2", "--m", "2", "--n", "2", "--format", "json")
        rec = json.loads(out)
        assert set(rec) == {"r", "s", "m", "n", "method", "terms"}
        keys = [(t["u"], t["v"], t["w"]) for t in rec["terms"]]
        assert keys == sorted(keys)
        assert all(isinstance(t["c"], str) and int(t["c"]) >= 0 for t in rec["terms"])

    def test_json_roundtrip(self, capsys):
        _, out, _ = run(capsys, "poly", "--r", "3", "--s", "1", "--m", "6", "--n", "5", "--format", "json")
        rec = OutputRecord.from_json(out)
        assert rec.to_json() == out
        assert OutputRecord.from_json(rec.to_json()) == rec

    def test_csv_matches_json(self, capsys):
        args = ["poly", "--r", "3", "--s", "3", "--m", "3", "--n", "5"]
        _, js, _ = run(capsys, *args, "--format", "json")
        _, cs, _ = run(capsys, *args, "--format", "csv")
        from_json = sorted((t["u"], t["v"], t["w"], t["c"]) for t in json.loads(js)["terms"])
        rows = list(csv.DictReader(io.StringIO(cs)))
        from_csv = sorted((int(x["u"]), int(x["v"]), int(x["w"]), x["c"]) for x in rows)
        assert from_json == from_csv

    def test_big_coefficients_are_strings(self, capsys):
        _, out, _ = run(capsys, "poly", "--r", "6", "--m", "2", "--n", "30", "--format", "json")
        coeffs = [int(t["c"]) for t in json.loads(out)["terms"]]
        assert max(coeffs) > 2**64

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "h.txt"
        _, out, _ = run(capsys, "poly", "--r", "2", "--m", "2", "--n", "2", "--out", str(path))
        assert path.read_text() == out

    def test_s_not_dividing(self, capsys):
        code, _, err = run(capsys, "poly", "--r", "4", "--s", "3", "--n", "2")
        assert code == 2 and "does not divide" in err

    def test_cap(self, capsys):
        code, _, err = run(capsys, "poly", "--r", "4", "--n", "7", "--method", "oracle")
        assert code == 2 and "exceeds cap" in err

    def test_closed_form_needs_m2(self, capsys):
        code, _, err = run(capsys, "poly", "--r", "2", "--m", "3", "--n", "2", "--method", "closed-m2")
        assert code == 2 and "m = 2" in err

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["poly", "--r", "2"])
        assert exc.value.code == 2


class TestCount:
    def test_excclr(self, capsys):
        assert run(capsys, "count", "--excclr", "2", "--r", "2", "--s", "2", "--n", "2")[:2] == \
            (0, "formula: 3\noracle: 3\n")

    def test_fix_exca(self, capsys):
        assert run(capsys, "count", "--fix", "1", "--exca", "0", "--r", "2", "--s", "2", "--n", "1")[:2] == \
            (0, "formula: 1\noracle: 1\n")

    def test_impossible(self, capsys):
        assert run(capsys, "count", "--fix", "3", "--exca", "0", "--r", "2", "--s", "2", "--n", "2")[:2] == \
            (0, "formula: 0\noracle: 0\n")

    def test_json(self, capsys):
        _, out, _ = run(capsys, "count", "--excclr", "4", "--r", "4", "--s", "4", "--n", "2", "--format", "json")
        assert json.loads(out) == {"r": 4, "s": 4, "n": 2, "excclr": 4, "formula": "5", "oracle": "5"}

    def test_oracle_skipped_above_cap(self, capsys):
        code, out, _ = run(capsys, "count", "--excclr", "4", "--r", "4", "--s", "4", "--n", "3", "--cap", "10")
        assert code == 0 and "skipped" in out

    @pytest.mark.parametrize("r,s", [(3, 1), (4, 2)])
    def test_regime(self, capsys, r, s):
        code, _, err = run(capsys, "count", "--excclr", "0", "--r", str(r), "--s", str(s), "--n", "2")
        assert code == 2 and "r even" in err

    def test_needs_query(self, capsys):
        assert run(capsys, "count", "--fix", "1", "--r", "2", "--s", "2", "--n", "2")[0] == 2


class TestVerify:
    def test_euler(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "euler", "--dmax", "7")
        assert code == 0
        assert out.count("PASS euler") == 7

    def test_theorem_grid(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "theorem", "--rmax", "3", "--mset", "2,3,4,6",
                           "--nmax", "6", "--quiet")
        assert code == 0 and out.endswith("0 failed\n")

    def test_swapped_m2_cases_fail(self, capsys, monkeypatch):
        real = F.m2_case
        swap = {"even-full": "even-cosh", "even-cosh": "even-full", "odd": "odd"}
        monkeypatch.setattr(F, "m2_case", lambda r, s: swap[real(r, s)])
        code, out, _ = run(capsys, "verify", "--suite", "all", "--quiet")
        assert code == 1
        assert "first failure: m2 r=2 s=1 m=2 n=1" in out

    def test_report_file(self, capsys, tmp_path):
        path = tmp_path / "report.txt"
        run(capsys, "verify", "--suite", "ucoeff", "--out", str(path))
        assert path.read_text().splitlines()[-1] == "5 passed, 0 failed"


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "wreathstat", "poly", "--r", "1", "--m", "2", "--n", "2"],
                         capture_output=True, text=True, check=True).stdout
    assert out == "v + u^2\n"


def test_record_from_poly_order():
    rec = OutputRecord.from_poly(GroupSpec(1, 1, 2, 2), MPoly({(0, 1, 0): 1, (2, 0, 0): 1}), "theorem")
    assert rec.polynomial == ((0, 1, 0, "1"), (2, 0, 0, "1"))
