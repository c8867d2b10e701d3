import io
import json
import subprocess
import sys

import pytest

from sl2n_howe.cli import ConfigError, main, make_config, parse_parameter, run


def run_cli(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_parameter():
    assert str(parse_parameter("1/2")) == "1/2"
    assert str(parse_parameter("-3/6")) == "-1/2"
    with pytest.raises(ConfigError, match="non-integer"):
        parse_parameter("4")
    with pytest.raises(ConfigError):
        parse_parameter("1/x")


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--a1", "4"],
        ["verify", "--a2", "-2/1"],
        ["verify", "--a1", "1.5"],
        ["branch", "--b-min", "2", "--b-max", "1"],
        ["branch", "--n", "1"],
        ["branch", "--variant", "xx"],
    ],
)
def test_invalid_config_exit_2(args, capsys):
    code, out, err = run_cli(args, capsys)
    assert code == 2
    assert out == ""
    assert err


def test_hwv_with_oracle(capsys):
    code, out, _ = run_cli(["hwv", "--n", "3", "--a1", "1/2", "--a2", "1/3", "--b", "0", "--c", "2", "--oracle"], capsys)
    d = json.loads(out)
    assert code == 0
    assert len(d["hwv"]["terms"]) == 6
    assert d["oracle"] == {"kernel_dim": 1, "match": True}


def test_branch_crit_zero(capsys):
    code, out, _ = run_cli(["branch", "--n", "2", "--a1", "1/2", "--a2", "1/2"], capsys)
    d = json.loads(out)
    assert code == 0
    row = next(e for e in d["entries"] if e["b"] == 0)
    assert row["regime"] == "crit_zero"
    assert row["slN"]["hw"] == ["-1"] and row["sl2"]["hw"] == ["-1"]
    assert d["seed"] == 0


def test_table_markdown(capsys):
    code, out, _ = run_cli(
        ["table", "--n", "3", "--a1", "3/2", "--a2", "1/2", "--variant", "ss", "--format", "md", "--c-max", "1"], capsys
    )
    assert code == 0
    assert "| b | regime |" in out and "not one-to-one" in out


def test_series(capsys):
    code, out, _ = run_cli(["series", "--n", "2", "--a1", "3/2", "--a2", "1/2", "--b", "-1"], capsys)
    assert code == 0
    assert json.loads(out)["series"]["regime"] == "crit_neg"


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# example\nn = 3\na1 = 3/2\na2=1/2\nb-min=-1\nb_max = 1\n")
    c = make_config(["branch", "--config", str(cfg), "--b-max", "0"])
    assert (c.n, str(c.a1), c.b_min, c.b_max) == (3, "3/2", -1, 0)
    bad = tmp_path / "bad.cfg"
    bad.write_text("frobnicate = 1\n")
    code, _, err = run_cli(["branch", "--config", str(bad)], capsys)
    assert code == 2 and "unknown" in err


def test_verification_failure_exit_1(monkeypatch):
    import sl2n_howe.cli as cli
    from sl2n_howe.branching import Check

    monkeypatch.setattr(cli, "run_suite", lambda cfg, workers=1: [Check("forced", False, "")])
    buf = io.StringIO()
    assert run(make_config(["verify"]), out=buf) == 1
    assert json.loads(buf.getvalue())["pass"] is False


def test_verify_deterministic_across_workers(capsys):
    args = ["verify", "--n", "2", "--a1", "3/2", "--a2", "1/2", "--seed", "7"]
    outs = []
    for extra in ([], [], ["--workers", "3"]):
        code, out, _ = run_cli(args + extra, capsys)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]
    assert json.loads(outs[0])["seed"] == 7


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sl2n_howe.cli", "hwv", "--b", "1", "--c", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["hwv"]["b"] == 1
