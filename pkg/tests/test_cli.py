import json
from pathlib import Path

import pytest

from springerc.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_springer_tsv_matches_golden(capsys):
    code, out, _ = run(capsys, "springer", "--d", "2", "--format", "tsv")
    assert code == 0
    assert out == (GOLDEN / "springer_d2.tsv").read_text()


def test_springer_row_counts(capsys):
    for d, rows in ((0, 1), (1, 2), (2, 5)):
        code, out, _ = run(capsys, "springer", "--d", str(d), "--format", "tsv")
        assert code == 0
        assert len(out.strip().split("\n")) == rows + 1  # header line


def test_springer_pretty_carries_names(capsys):
    code, out, _ = run(capsys, "springer", "--d", "2")
    assert code == 0
    for name in ("sign", "ssign", "lsign", "refl", "triv"):
        assert name in out


def test_springer_bound(capsys):
    code, _, err = run(capsys, "springer", "--d", "11")
    assert code == 2
    assert "bound" in err


def test_htop_json_matches_golden(capsys):
    code, out, _ = run(capsys, "htop", "--n", "2", "--d", "2", "--format", "json")
    assert code == 0
    assert out == (GOLDEN / "htop_n2_d2.json").read_text()


def test_htop_single_orbit(capsys):
    code, out, _ = run(
        capsys, "htop", "--n", "2", "--d", "2", "--orbit", "2,1,1", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 1
    assert payload[0]["total"] == 3
    by_component = {c["d"]: c["htop"] for c in payload[0]["components"]}
    assert by_component == {
        "1,1,0,1,1": 1,
        "0,1,2,1,0": 0,
        "1,0,2,0,1": 0,
        "0,2,0,2,0": 1,
        "2,0,0,0,2": 1,
        "0,0,4,0,0": 0,
    }


def test_htop_emits_one_report_per_orbit(capsys):
    code, out, _ = run(capsys, "htop", "--n", "2", "--d", "2", "--format", "json")
    assert code == 0
    assert [r["orbit"] for r in json.loads(out)] == ["4", "2,2", "2,1,1", "1,1,1,1"]


def test_htop_rejects_non_type_c_orbit(capsys):
    code, _, err = run(capsys, "htop", "--n", "2", "--d", "2", "--orbit", "3,1")
    assert code == 3
    assert "type-C" in err


def test_htop_resource_bound(capsys):
    code, _, err = run(capsys, "htop", "--n", "5", "--d", "5")
    assert code == 2
    assert "ceiling" in err


def test_htop_tsv_shape(capsys):
    code, out, _ = run(capsys, "htop", "--n", "2", "--d", "2", "--format", "tsv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "orbit\tcomponent\tdegree\thtop\torbit_total"
    assert len(lines) == 1 + 4 * 6


def test_theta_count_and_filter(capsys):
    code, out, _ = run(capsys, "theta", "--n", "2", "--d", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["count"] == 25
    code, out, _ = run(
        capsys,
        "theta", "--n", "2", "--d", "2",
        "--component", "0,0,4,0,0", "--format", "json",
    )
    payload = json.loads(out)
    assert payload["count"] == 1
    assert payload["matrices"][0]["chi"] == "3,3"
    code, out, _ = run(capsys, "theta", "--n", "0", "--d", "1", "--format", "json")
    assert json.loads(out)["count"] == 1


def test_theta_rejects_bad_component(capsys):
    code, _, err = run(
        capsys, "theta", "--n", "2", "--d", "2", "--component", "1,0,1"
    )
    assert code == 3
    code, _, err = run(
        capsys, "theta", "--n", "2", "--d", "2", "--component", "1,0,2,0,2"
    )
    assert code == 3


def test_theta_pretty_prints_grids(capsys):
    code, out, _ = run(
        capsys, "theta", "--n", "2", "--d", "2", "--component", "0,0,4,0,0"
    )
    assert code == 0
    assert "count 1" in out
    assert "1 1 1 1" in out


@pytest.mark.parametrize("suite", ["sw", "springer", "geometry", "characters", "all"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", suite)
    assert code == 0
    assert "FAIL" not in out
    assert "checks passed" in out


def test_outputs_are_deterministic(capsys):
    first = run(capsys, "htop", "--n", "2", "--d", "2", "--format", "json")
    second = run(capsys, "htop", "--n", "2", "--d", "2", "--format", "json")
    assert first == second
