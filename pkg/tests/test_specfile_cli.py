import pytest
from click.testing import CliRunner

from superwarp.bundled import bundled_names, load_bundled
from superwarp.cli import main
from superwarp.geometry import Chart, InvariantViolation
from superwarp.specfile import SpecError, load_manifold, parse_super

GOOD_SPEC = """
name = "line"
metric_parity = 0
coordinates = [{ name = "t", parity = 0 }]
[metric]
"t,t" = "-1"
[P]
t = "1"
"""

ASYMMETRIC_SPEC = """
name = "bad"
metric_parity = 0
coordinates = [
    { name = "x", parity = 0 },
    { name = "y", parity = 0 },
]
[metric]
"x,x" = "1"
"y,y" = "1"
"x,y" = "1"
"y,x" = "-1"
"""


def test_all_bundled_specs_load():
    names = bundled_names()
    assert len(names) >= 13
    for name in names:
        spec = load_bundled(name)
        assert spec["kind"] in ("manifold", "warped")


def test_parse_super_ordering_sign():
    chart = Chart([("t", 0), ("xi", 1), ("eta", 1)])
    s = parse_super("3*xi*eta - eta*xi", chart)
    assert s.coefficient((0, 1)) == 4
    assert parse_super("xi*xi", chart).is_zero()


def test_parse_super_rejects_nested_odd():
    chart = Chart([("t", 0), ("xi", 1)])
    with pytest.raises(SpecError):
        parse_super("sin(xi)", chart)


def test_asymmetric_metric_rejected(tmp_path):
    import tomli
    data = tomli.loads(ASYMMETRIC_SPEC)
    with pytest.raises(InvariantViolation):
        load_manifold(data)


def test_cli_compute_golden(tmp_path):
    spec = tmp_path / "line.toml"
    spec.write_text(GOOD_SPEC)
    runner = CliRunner()
    res = runner.invoke(main, ["compute", "--spec", str(spec),
                               "--connection", "ssnm"])
    assert res.exit_code == 0
    assert "GAMMA\t(t,t)^t\t(-1)" in res.output
    # one even dimension: the curvature trace has nothing to sum over
    assert "# nonzero ricci entries: 0" in res.output


def test_cli_compute_parse_error(tmp_path):
    spec = tmp_path / "broken.toml"
    spec.write_text("kind = [unclosed")
    runner = CliRunner()
    res = runner.invoke(main, ["compute", "--spec", str(spec)])
    assert res.exit_code == 2


def test_cli_compute_invariant_error(tmp_path):
    spec = tmp_path / "asym.toml"
    spec.write_text(ASYMMETRIC_SPEC)
    runner = CliRunner()
    res = runner.invoke(main, ["compute", "--spec", str(spec)])
    assert res.exit_code == 3


def test_cli_verify_statement_scope(tmp_path):
    runner = CliRunner()
    out = tmp_path / "report.txt"
    res = runner.invoke(main, ["verify", "--scope", "warped-lc-connection",
                               "--out", str(out)])
    assert res.exit_code == 0
    text = out.read_text()
    assert "SUMMARY" in text and "fail=0" in text


def test_cli_verify_unknown_scope():
    runner = CliRunner()
    res = runner.invoke(main, ["verify", "--scope", "nonsense"])
    assert res.exit_code == 2


def test_cli_verify_reports_are_deterministic(tmp_path):
    runner = CliRunner()
    outs = []
    for i in range(2):
        out = tmp_path / f"r{i}.txt"
        runner.invoke(main, ["verify", "--scope", "warped-lc-ricci",
                             "--out", str(out), "--seed", "5"])
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_cli_classify_exit_codes():
    runner = CliRunner()
    res = runner.invoke(main, ["classify", "--base", "R10", "--conn", "ssnm",
                               "--l", "1", "--lambda0", "1"])
    assert res.exit_code == 0
    assert "FAMILY\tlinear" in res.output
    res = runner.invoke(main, ["classify", "--base", "R10", "--conn", "lc",
                               "--l", "1"])
    assert res.exit_code == 4
    res = runner.invoke(main, ["classify", "--base", "R12", "--conn", "ssnm",
                               "--l", "0"])
    assert res.exit_code == 5
    res = runner.invoke(main, ["classify", "--base", "R12", "--conn", "ssnm",
                               "--l", "5"])
    assert res.exit_code == 0
    assert "families: 0" in res.output
