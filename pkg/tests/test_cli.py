import json

from click.testing import CliRunner

from dynsu2.cli import main


def run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env)


def test_normalize():
    res = run("normalize", "alpha*delta")
    assert res.exit_code == 0
    assert res.output.strip() == "1 + q*F(lambda)*gamma*beta"
    assert run("normalize", "1").output.strip() == "1"


def test_normalize_parse_error():
    res = run("normalize", "alpha*(")
    assert res.exit_code == 2
    assert "column 8" in res.output


def test_unknown_suite_is_usage_error():
    assert run("verify", "nosuch").exit_code == 2


def test_verify_report_shape():
    res = run("verify", "qdyb")
    assert res.exit_code == 0
    rep = json.loads(res.output)
    assert rep["schema"] == 1 and rep["status"] == "pass"
    assert rep["counts"] == {"pass": 8, "fail": 0, "skipped": 0}
    assert all({"id", "anchor", "indices", "points", "status"} <= set(r) for r in rep["records"])


def test_verify_deterministic_and_env_seed():
    a = run("verify", "biedenharn", "--bound", "1", "--points", "20", "--seed", "7")
    b = run("verify", "biedenharn", "--bound", "1", "--points", "20", "--seed", "7")
    c = run("verify", "biedenharn", "--bound", "1", "--points", "20", env={"DYNSU2_SEED": "7"})
    assert a.exit_code == 0
    assert a.output == b.output == c.output


def test_verify_all_small_bound(tmp_path):
    out = tmp_path / "all.json"
    res = run("verify", "all", "--bound", "1", "--out", str(out))
    assert res.exit_code == 0
    rep = json.loads(out.read_text())
    assert rep["status"] == "pass"
    assert len(rep["suites"]) >= 14


def test_table_matelem():
    res = run("table", "matelem", "--N", "1")
    assert res.exit_code == 0
    rows = json.loads(res.output)["rows"]
    assert [(r["k"], r["j"], r["word"], r["value"]) for r in rows] == [
        (0, 0, "delta", "1"), (0, 1, "gamma", "1"), (1, 0, "beta", "1"), (1, 1, "alpha", "1")]


def test_table_moments_at_point():
    res = run("table", "moments", "--d", "3", "--point", "q=1/3,lambda=2/5,mu=7/9")
    assert res.exit_code == 0
    rows = json.loads(res.output)["rows"]
    assert [r["value"] for r in rows[:2]] == ["1", "89081/9450"]
    assert len(rows) == 4 and all("/" in r["value"] for r in rows[1:])


def test_table_cg_csv():
    res = run("table", "cg", "--M", "1", "--N", "1", "--s", "0", "--format", "csv")
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0] == "M,N,s,j,k,value"
    assert len(lines) == 5
    assert lines[1] == "1,1,0,0,0,1" and lines[4] == "1,1,0,1,1,1"


def test_table_errors():
    assert run("table", "cg", "--M", "1", "--N", "1", "--s", "2").exit_code == 2
    assert run("table", "moments", "--d", "99").exit_code == 2
    assert run("table", "moments", "--point", "lambda=2").exit_code == 2
    assert run("table", "tfun", "--N", "1", "--point", "q=1/3,lambda=2/5").exit_code == 2
