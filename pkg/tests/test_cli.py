import json

from click.testing import CliRunner

from walab.cli import main


def _json(result):
    # the runner mixes the stderr status line into output; the JSON body
    # ends at the last closing brace
    text = result.output
    return json.loads(text[:text.rindex("}") + 1])


def test_pyramid_info_exact_line():
    runner = CliRunner()
    result = runner.invoke(
        main, ["pyramid", "info", "--shape", "q=2,1;l=2,1", "--index", "3"])
    assert result.exit_code == 0
    assert result.output.strip() == "col=2,row=1,tilde=1,hat=absent"


def test_check_kernel_certificate_and_replay(tmp_path):
    runner = CliRunner()
    result = runner.invoke(
        main, ["check", "kernel", "--shape", "q=2,1;l=2,1",
               "--out", str(tmp_path)])
    assert result.exit_code == 0
    path = result.output.strip().splitlines()[0]
    cert = json.loads(open(path).read())
    assert cert["schema"] == "walab-cert-1"
    assert cert["status"] == "pass"
    assert cert["command"] == "check.kernel"

    replay = runner.invoke(main, ["replay", path])
    assert replay.exit_code == 0
    assert "reproduced: pass" in replay.output


def test_replay_detects_tampering(tmp_path):
    runner = CliRunner()
    result = runner.invoke(
        main, ["check", "kernel", "--shape", "q=3;l=1",
               "--out", str(tmp_path)])
    assert result.exit_code == 0
    path = result.output.strip().splitlines()[0]
    cert = json.loads(open(path).read())
    cert["status"] = "fail"
    with open(path, "w") as fh:
        json.dump(cert, fh)
    replay = runner.invoke(main, ["replay", path])
    assert replay.exit_code == 1


def test_replay_rejects_foreign_schema(tmp_path):
    path = tmp_path / "bogus.json"
    path.write_text(json.dumps({"schema": "other", "command": "x"}))
    runner = CliRunner()
    replay = runner.invoke(main, ["replay", str(path)])
    assert replay.exit_code == 1


def test_wgen_prints_expression():
    runner = CliRunner()
    result = runner.invoke(
        main, ["wgen", "--shape", "q=3;l=1", "--r", "1", "--p", "1",
               "--q", "2"])
    assert result.exit_code == 0
    cert = _json(result)
    assert cert["report"]["expr"]


def test_modes_bracket_sparse_triples():
    runner = CliRunner()
    result = runner.invoke(
        main, ["modes", "bracket", "--shape", "q=3;l=1",
               "--lhs", "W1[1,2]t^0", "--rhs", "W1[2,1]t^0",
               "--cutoff", "2"])
    assert result.exit_code == 0
    cert = _json(result)
    matrix = cert["report"]["matrix"]
    assert matrix and all(len(t) == 3 for t in matrix)


def test_usage_error_exit_two():
    runner = CliRunner()
    result = runner.invoke(main, ["check", "kernel"])  # missing --shape
    assert result.exit_code == 2


def test_qaffine_single_factor_rational():
    runner = CliRunner()
    result = runner.invoke(
        main, ["qaffine", "verify", "--n", "3", "--q", "3/2",
               "--factors", "1"])
    assert result.exit_code == 0
    cert = _json(result)
    assert cert["status"] == "pass"


def test_verify_rational_small():
    runner = CliRunner()
    result = runner.invoke(
        main, ["verify", "--map", "phi_z", "--shape", "q=3;l=1",
               "--z", "1", "--cutoff", "2", "--k", "7/3"])
    assert result.exit_code == 0
