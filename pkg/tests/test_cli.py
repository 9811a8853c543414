import json

import pytest

from ncquadric import STAGES
from ncquadric.cli import main

GOLDEN = "inputs/quadric3.pres"


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_golden_text(capsys):
    rc, out, err = run(capsys, GOLDEN)
    assert rc == 0
    assert err == ""
    assert out.startswith("quadric hypersurface analysis")
    assert "verdict: isolated singularity: yes" in out


def test_golden_json(capsys):
    rc, out, err = run(capsys, GOLDEN, "--json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["verdict"] is True
    assert [s["name"] for s in doc["stages"]] == list(STAGES)


def test_json_deterministic(capsys):
    _, out1, _ = run(capsys, GOLDEN, "--json", "--degree", "5")
    _, out2, _ = run(capsys, GOLDEN, "--json", "--degree", "5")
    assert out1 == out2


def test_stage_flag(capsys):
    rc, out, err = run(capsys, GOLDEN, "--stage", "verdict")
    assert rc == 0
    assert "[verdict]" in out
    assert "[idempotents]" not in out


def test_stage_flag_rejects_unknown(capsys):
    with pytest.raises(SystemExit) as ei:
        main([GOLDEN, "--stage", "nonsense"])
    assert ei.value.code == 2
    capsys.readouterr()


def test_degree_too_small(capsys):
    rc, out, err = run(capsys, GOLDEN, "--degree", "3")
    assert rc == 2
    assert "error:" in err
    assert "degree" in err


def test_missing_file(capsys):
    rc, out, err = run(capsys, "inputs/absent.pres")
    assert rc == 2
    assert err.startswith("error:")


def test_parse_error_reports_location(tmp_path, capsys):
    bad = tmp_path / "bad.pres"
    bad.write_text("field = Q(i)\nvars = x, y\nrel = x*q\ncentral = x*x\n")
    rc, out, err = run(capsys, str(bad))
    assert rc == 2
    assert "line 3" in err and "unknown variable 'q'" in err


def test_pipeline_failure_exit_code(tmp_path, capsys):
    notqp = tmp_path / "notqp.pres"
    notqp.write_text("field = Q\nvars = x, y\nrel = x*x\ncentral = y*y\n")
    rc, out, err = run(capsys, str(notqp))
    assert rc == 1
    assert "[qp-certificate] failed" in out


def test_skip_qp_check_flag(tmp_path, capsys):
    notqp = tmp_path / "notqp.pres"
    notqp.write_text("field = Q\nvars = x, y\nrel = x*x\ncentral = y*y\n")
    rc, out, err = run(capsys, str(notqp), "--skip-qp-check")
    assert "[qp-certificate] warning" in out
    assert rc == 1  # the centrality stage still fails for this input


def test_nonsplit_exit_zero(capsys):
    rc, out, err = run(capsys, "inputs/node_rational.pres")
    assert rc == 0
    assert "[idempotents] warning" in out
    assert "[mcm-classification] skipped" in out


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run(
        [sys.executable, "-m", "ncquadric", GOLDEN, "--stage",
         "build-quotient"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "[build-quotient] ok" in proc.stdout
