import json
import subprocess
import sys
from pathlib import Path

import pytest

from satake.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_roots_g2(capsys):
    code, out, _ = run(capsys, "roots", "G2")
    assert code == 0
    assert "γ∨ = 3α1∨+2α2∨" in out
    assert "h = 6" in out and "degrees 2, 6" in out


def test_roots_a1(capsys):
    code, out, _ = run(capsys, "roots", "A", "1")
    assert code == 0 and "type A1" in out


def test_roots_f4_json(capsys):
    code, out, _ = run(capsys, "roots", "F4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == "satake.rootdatum/1"
    assert len(doc["positive_coroots"]) == len(doc["levels"]) == 24
    assert max(doc["levels"]) == 11


def test_filtration_table_g2(capsys):
    code, out, _ = run(capsys, "filtration-table", "G2")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 5
    assert lines[-1] == "1 | 0 | 14"


@pytest.mark.parametrize("name,rows", [("F4", 16), ("E8", 70)])
def test_filtration_table_golden(capsys, name, rows):
    code, out, _ = run(capsys, "filtration-table", name, "--format", "tsv")
    assert code == 0
    assert out == (GOLDEN / f"filtration_{name}.tsv").read_text(encoding="utf-8")
    assert len(out.splitlines()) == rows + 1


def test_filtration_table_needs_exceptional(capsys):
    code, _, err = run(capsys, "filtration-table", "C3")
    assert code == 2 and "exceptional" in err


def test_half_integral_e7(capsys):
    code, out, _ = run(capsys, "half-integral", "E7")
    assert (code, out.strip()) == (0, "0, 1/2*w7")


def test_extraneous_sp6(capsys):
    code, out, _ = run(capsys, "extraneous", "C", "3", "2,2,2")
    assert code == 0 and "(0, 1/2, 1)" in out


def test_extraneous_unknown_orbit(capsys):
    code, _, err = run(capsys, "extraneous", "E8", "A9")
    assert code == 2 and "unknown orbit" in err


def test_regions_e8(capsys):
    code, out, _ = run(capsys, "regions", "E8")
    assert (code, out.strip()) == (0, "25080")


def test_regions_enumerate(capsys):
    code, out, _ = run(capsys, "regions", "G2", "--enumerate")
    assert out.split() == ["8", "8"]


def test_central_point(capsys):
    code, out, _ = run(capsys, "central-point", "C3", "2,2,2")
    assert code == 0 and "(1/2, 1/2, 1/2)" in out


def test_weight_pattern(capsys):
    code, out, _ = run(capsys, "weight-pattern", "E8", "4A1")
    assert out.strip() == "64,56,28,8"
    code, out, _ = run(capsys, "weight-pattern", "C3", "--point", "0,1/2,1/2", "--rep", "standard", "--all")
    assert code == 0 and out.strip()
    code, _, err = run(capsys, "weight-pattern", "C3", "--point", "0,0.5,0")
    assert code == 2 and "p/q" in err


def test_orbit_from_pattern(capsys):
    code, out, _ = run(capsys, "orbit-from-pattern", "E8", "64,56,28,8")
    assert (code, out.strip()) == (0, "4A1")


def test_cs_4a1(capsys):
    code, out, _ = run(capsys, "cs-4a1", "2/5", "21/50", "11/20", "59/100")
    assert code == 0 and "| true | extra" in out
    code, out, _ = run(capsys, "cs-4a1", "--scan", "2")
    assert out.startswith("0 ")
    code, _, _ = run(capsys, "cs-4a1", "1", "0", "0", "0")
    assert code == 2
    code, _, _ = run(capsys, "cs-4a1", "1", "0")
    assert code == 1


def test_fold(capsys):
    code, out, _ = run(capsys, "fold", "A", "4", "2")
    assert code == 0 and "C2" in out and "points: 0, 1/2*w2" in out
    code, _, _ = run(capsys, "fold", "E7", "2")
    assert code == 2


def test_check_property_a_file(capsys, tmp_path):
    f = tmp_path / "m.tsv"
    f.write_text("i\tk\ta\n0\t1\t1\n0\t-1\t1\n")
    code, out, _ = run(capsys, "check-property-a", str(f), "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["symmetric"] is True
    assert doc["verdict"]["case"] == "TruncationAt" and doc["verdict"]["i0"] == 1
    code, _, _ = run(capsys, "check-property-a", str(tmp_path / "missing.tsv"))
    assert code == 1


def test_check_property_a_random_seeded(capsys):
    _, a, _ = run(capsys, "check-property-a", "--random", "200", "--seed", "4", "--format", "json")
    _, b, _ = run(capsys, "check-property-a", "--random", "200", "--seed", "4", "--format", "json")
    assert a == b and json.loads(a)["counts"]["Violation"] == 0


def test_azs_table(capsys):
    code, out, _ = run(capsys, "azs-table", "--format", "tsv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("dual_type")
    assert all(line.endswith("ok") for line in lines[1:])


def test_exit_codes(capsys):
    assert run(capsys, "roots", "X9")[0] == 2
    assert run(capsys, "roots", "E5")[0] == 2
    with pytest.raises(SystemExit) as err:
        main(["roots"])
    assert err.value.code == 1
    with pytest.raises(SystemExit) as err:
        main(["no-such-command"])
    assert err.value.code == 1
    with pytest.raises(SystemExit) as err:
        main(["regions", "E8", "--format", "xml"])
    assert err.value.code == 1


JSON_COMMANDS = [
    ["roots", "G2"],
    ["orbits", "F4"],
    ["filtration-table", "G2"],
    ["half-integral", "D6"],
    ["extraneous", "D", "6"],
    ["extraneous", "E8"],
    ["central-point", "E8", "D6"],
    ["weight-pattern", "D4", "4,4", "II", "--rep", "halfspin+"],
    ["orbit-from-pattern", "F4", "10,0,7,0,6,0,6,0,1,0,1"],
    ["cs-4a1", "0", "0", "0", "1/4"],
    ["regions", "B3", "--enumerate"],
    ["fold", "D", "5", "2"],
    ["azs-table"],
]


@pytest.mark.parametrize("argv", JSON_COMMANDS, ids=lambda a: " ".join(a))
def test_json_round_trip(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert json.loads(json.dumps(doc)) == doc
    # tsv output is available for every command too
    code, tsv, _ = run(capsys, *argv, "--format", "tsv")
    assert code == 0 and tsv.strip()


def test_console_script():
    out = subprocess.run(
        [sys.executable, "-m", "satake.cli", "half-integral", "B3"], capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "0, 1/2*w1"
