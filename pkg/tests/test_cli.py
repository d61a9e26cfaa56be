import json
import subprocess
import sys

import pytest

from mixedsum.caps import CAPS, Caps
from mixedsum.cli import CACHE_ENV, run_cli


@pytest.fixture(autouse=True)
def restore_caps():
    saved = Caps(**CAPS.__dict__)
    yield
    CAPS.__dict__.update(saved.__dict__)


def run(capsys, *argv):
    code = run_cli(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_thm12_example(capsys):
    code, out, _ = run(capsys, "verify", "thm12", "-R", "x", "-I", "x^2", "-S", "y", "-J", "y^2",
                       "--smax", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1 and data["ok"]
    assert {r["s"] for r in data["reports"]} == {1, 2, 3}
    assert all(r["verdict"] == "equal" for r in data["reports"])


def test_golod_witness(capsys):
    code, out, _ = run(capsys, "golod", "-R", "x,y", "-I", "x*y", "--json")
    data = json.loads(out)
    assert code == 0 and data["is_star_strongly_golod"] is False and data["witness"]


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "betti", "-R", "x,y", "-I", "x^")
    assert code == 2
    assert "position 2" in err and "^" in err


def test_missing_ideal_exit_2(capsys):
    assert run(capsys, "invariants", "-R", "x")[0] == 2


def test_cap_exit_3(capsys):
    code, _, err = run(capsys, "closure", "integral", "-R", "x,y", "-I", "x^9, y^9", "--cap-closure-box", "5")
    assert code == 3 and "cap" in err


def test_failed_certificate_exit_1(capsys, monkeypatch):
    import mixedsum.cli as cli
    monkeypatch.setattr(cli, "verify_lcm_property", lambda cert: False)
    code, out, _ = run(capsys, "certificate", "lcm-map", "-R", "x,y", "-I", "x^2, x*y", "--target", "x, y")
    assert code == 1 and "FAIL" in out


def test_betti_table_output(capsys):
    code, out, _ = run(capsys, "betti", "-R", "x,y,z", "-I", "x*y, y*z, x*z")
    assert code == 0
    assert "total:" in out and "3" in out


def test_betti_of_mixed_sum_json(capsys):
    code, out, _ = run(capsys, "betti", "-R", "x", "-I", "x^2", "-S", "y", "-J", "y^2", "--json")
    data = json.loads(out)
    assert data["rows"] == {"0": {"2": 2}, "1": {"4": 1}}


def test_lind_and_invariants(capsys):
    assert "= 1" in run(capsys, "lind", "-R", "x,y", "-I", "x^2, y^2")[1]
    code, out, _ = run(capsys, "invariants", "-R", "x,y", "-I", "x^2, x*y, y^2", "--json")
    data = json.loads(out)
    assert (data["pd_quotient"], data["depth_quotient"], data["reg_quotient"]) == (2, 0, 1)


def test_closures(capsys):
    assert run(capsys, "closure", "integral", "-R", "x,y", "-I", "x^2, y^2")[1].strip() == "x^2, x*y, y^2"
    assert run(capsys, "closure", "saturation", "-R", "x,y", "-I", "x^2, x*y")[1].strip() == "x"
    out = run(capsys, "closure", "symbolic", "-R", "x,y", "-I", "x*y", "--power", "2")[1]
    assert out.strip() == "x^2*y^2"


def test_certificate_power(capsys):
    code, out, _ = run(capsys, "certificate", "lcm-map", "-R", "x,y", "-I", "x^2*y, y^3", "--power", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] is True and data["hypothesis"] is True


def test_cache_is_pure(capsys, tmp_path, monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)
    argv = ["verify", "thm59", "-R", "x,y", "-I", "x^2, x*y^2", "-S", "z", "-J", "z^3", "--smax", "3", "--json"]
    fresh = run(capsys, *argv)[1]
    first = run(capsys, *argv, "--cache-dir", str(tmp_path))[1]
    # warm the cache with a longer table, then read it back
    run(capsys, "powers", "-R", "x,y", "-I", "x^2, x*y^2", "--smax", "6", "--lind", "--cache-dir", str(tmp_path))
    second = run(capsys, *argv, "--cache-dir", str(tmp_path))[1]
    assert fresh == first == second
    assert list(tmp_path.glob("*.json"))


def test_cache_dir_from_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    run(capsys, "powers", "-R", "x", "-I", "x^2", "--smax", "2")
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_random_suite_deterministic(capsys):
    a = run(capsys, "random-suite", "thm12", "--seed", "3", "--count", "3", "--smax", "2", "--json")
    b = run(capsys, "random-suite", "thm12", "--seed", "3", "--count", "3", "--smax", "2", "--json")
    assert a == b and a[0] == 0
    assert json.loads(a[1])["ok"]


@pytest.mark.parametrize("suite", ["identities", "dstar", "golod", "thm63", "cor65", "c_fold"])
def test_random_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "random-suite", suite, "--count", "2", "--smax", "1")
    assert code == 0, out


def test_verify_help_lists_ids(capsys):
    with pytest.raises(SystemExit):
        run_cli(["verify", "--help"])
    out = capsys.readouterr().out
    for tid in ("thm12", "prop51", "thm58", "cor65", "c_fold", "splitting"):
        assert tid in out


def test_bad_char_exit_2(capsys):
    assert run(capsys, "betti", "-R", "x", "-I", "x", "--char", "4")[0] == 2


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "mixedsum.cli", "golod", "-R", "x,y", "-I", "x^2, x*y, y^2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "true" in proc.stdout
