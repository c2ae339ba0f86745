import io
import json
import subprocess
import sys

from arczeta import LaurentPolynomial, TruncatedSeries, scissor
from arczeta.cli import run


def invoke(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out


def test_beta_x0_text(capsys):
    code, out = invoke(capsys, ["beta", "x0", "--m", "2", "--M", "2"])
    assert code == 0
    assert out.strip() == "u^3 + u^2 - u"


def test_beta_commands_json(capsys):
    code, out = invoke(capsys, ["beta", "x1", "--s", "2", "--t", "1", "--json"])
    assert code == 0
    assert json.loads(out) == [[1, "1"], [2, "1"]]
    code, out = invoke(capsys, ["beta", "z", "--m", "1", "--M", "2", "--json"])
    assert code == 0
    assert json.loads(out) == [[0, "1"], [1, "1"]]
    code, out = invoke(capsys, ["beta", "xneg1", "--s", "2", "--t", "0", "--json"])
    assert code == 0
    assert json.loads(out) == []


def test_zeta_json_example(capsys):
    code, out = invoke(
        capsys,
        [
            "zeta",
            "--dim",
            "3",
            "--plus",
            "2",
            "--minus",
            "1",
            "--selector",
            "plus",
            "--order",
            "2",
            "--json",
        ],
    )
    assert code == 0
    assert json.loads(out) == {"order": 2, "terms": [[2, [[-2, "1"], [-1, "1"]]]]}


def test_zeta_strata_output(capsys):
    code, out = invoke(
        capsys,
        [
            "zeta",
            "--dim",
            "2",
            "--plus",
            "1",
            "--minus",
            "1",
            "--selector",
            "naive",
            "--order",
            "3",
            "--strata",
            "--json",
        ],
    )
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"series", "strata"}
    assert len(payload["strata"]) == 3
    for report in payload["strata"]:
        total = LaurentPolynomial.from_json(report["total_beta"])
        summed = LaurentPolynomial.zero()
        for stratum in report["strata"]:
            summed = summed + LaurentPolynomial.from_json(stratum["beta"])
        assert summed == total


def test_zeta_strata_text(capsys):
    code, out = invoke(
        capsys,
        ["zeta", "--dim", "1", "--plus", "1", "--minus", "0", "--selector", "plus",
         "--order", "2", "--strata"],
    )
    assert code == 0
    assert "(2*u^-1)*T^2 + O(T^3)" in out
    assert "T^1 strata (plus):" in out
    assert "(empty: no admissible block order)" in out
    assert "T^2 strata (plus):" in out
    assert "total: 2*u" in out


def test_split_text(capsys):
    code, out = invoke(capsys, ["split", "--poly", "x1^2 + 2*x1*x2^2", "--jet", "4"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1] == "x1 -> x1 - x2^2"
    assert lines[2] == "x2 -> x2"
    assert lines[3] == "Q = x1^2"
    assert lines[4] == "F = -x2^4"


def test_recover_json(capsys):
    code, out = invoke(
        capsys,
        [
            "recover",
            "--plus-coeff",
            '[[-2,"1"],[-1,"1"]]',
            "--minus-coeff",
            '[[-2,"-1"],[-1,"1"]]',
            "--json",
        ],
    )
    assert code == 0
    assert json.loads(out) == {"s": 2, "t": 1}


def test_recover_naive_text(capsys):
    code, out = invoke(
        capsys, ["recover-naive", "--coeff", '[[0,"1"],[-1,"-1"],[-2,"-1"],[-3,"1"]]']
    )
    assert code == 0
    assert out.strip() == "determined: m = 2, M = 2"
    code, out = invoke(capsys, ["recover-naive", "--coeff", '[[0,"1"],[-1,"-1"]]'])
    assert code == 0
    assert out.startswith("ambiguous:")


def test_inertia_and_split(capsys):
    code, out = invoke(capsys, ["inertia", "--poly", "x1*x2"])
    assert code == 0
    assert out.strip() == "s = 1, t = 1, rank = 2, corank = 0, index = 1"
    code, out = invoke(
        capsys, ["split", "--poly", "x1^2 + 2*x1*x2^2", "--jet", "4", "--json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["inertia"] == {"s": 1, "t": 0, "rank": 1, "corank": 1, "index": 0}
    assert payload["quadratic_part"] == {"nvars": 2, "terms": [[[2, 0], "1"]]}
    assert payload["remainder"] == {"nvars": 2, "terms": [[[0, 4], "-1"]]}


def test_discriminate_text(capsys):
    code, out = invoke(
        capsys,
        [
            "discriminate",
            "--f",
            "x1^2+x2^2-x3^2",
            "--g",
            "x1^2-x2^2-x3^2",
            "--order",
            "2",
        ],
    )
    assert code == 0
    assert out.strip() == "distinguished: plus zeta coefficients differ at T^2"


def test_beta_expr_from_file_and_stdin(capsys, tmp_path, monkeypatch):
    payload = {
        "op": "product",
        "children": [
            {"atom": "affine_space", "k": 2},
            {"atom": "quadric_affine", "c": 1, "s": 1, "t": 1},
        ],
    }
    path = tmp_path / "expr.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    code, out = invoke(capsys, ["beta", "expr", str(path)])
    assert code == 0
    assert out.strip() == "u^3 - u^2"
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(payload)))
    code, out = invoke(capsys, ["beta", "expr", "-"])
    assert code == 0
    assert out.strip() == "u^3 - u^2"


def test_domain_error_envelope(capsys):
    code, out = invoke(
        capsys,
        [
            "recover",
            "--plus-coeff",
            '[[0,"1"],[1,"1"],[2,"1"]]',
            "--minus-coeff",
            '[[0,"1"]]',
        ],
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["error"] == "NotSignatureForm"
    assert "detail" in payload

    code, out = invoke(capsys, ["inertia", "--poly", "x1 + x2^2"])
    assert code == 1
    assert json.loads(out)["error"] == "NotSingularAtOrigin"

    code, out = invoke(capsys, ["inertia", "--poly", "x1^"])
    assert code == 1
    payload = json.loads(out)
    assert payload["error"] == "GermSyntaxError"
    assert "offset 3" in payload["detail"]

    code, out = invoke(capsys, ["beta", "z", "--m", "0", "--M", "3"])
    assert code == 1
    assert json.loads(out)["error"] == "EmptyProjectiveQuadric"


def test_usage_error_exit_code(capsys):
    assert run(["beta", "x0", "--m", "2"]) == 2
    assert run(["no-such-command"]) == 2
    assert run([]) == 2


def test_json_output_is_byte_stable(capsys):
    argv = [
        "zeta",
        "--dim",
        "4",
        "--plus",
        "2",
        "--minus",
        "2",
        "--selector",
        "naive",
        "--order",
        "6",
        "--json",
    ]
    _, first = invoke(capsys, argv)
    _, second = invoke(capsys, argv)
    assert first == second


def test_text_and_json_agree(capsys):
    _, text = invoke(capsys, ["beta", "x0", "--m", "3", "--M", "2"])
    _, machine = invoke(capsys, ["beta", "x0", "--m", "3", "--M", "2", "--json"])
    assert LaurentPolynomial.from_text(text.strip()) == LaurentPolynomial.from_json(
        json.loads(machine)
    )
    argv = ["zeta", "--dim", "3", "--plus", "1", "--minus", "2", "--order", "5"]
    _, text = invoke(capsys, argv)
    _, machine = invoke(capsys, argv + ["--json"])
    assert TruncatedSeries.from_text(text.strip()) == TruncatedSeries.from_json(
        json.loads(machine)
    )


def test_selfcheck_small(capsys):
    code, out = invoke(capsys, ["selfcheck", "--max", "3"])
    assert code == 0
    assert "closed-form/oracle grid: 48 identities OK" in out
    assert "all checks passed" in out


def test_selfcheck_reports_corruption(capsys, monkeypatch):
    true_cone = scissor.beta_cone

    def corrupted(plus, minus):
        value = true_cone(plus, minus)
        if (plus, minus) == (2, 2):
            return value + LaurentPolynomial.one()
        return value

    monkeypatch.setattr(scissor, "beta_cone", corrupted)
    code, out = invoke(capsys, ["selfcheck", "--max", "3"])
    assert code == 1
    assert "(c=0, s=2, t=2)" in out
    assert "SELFCHECK FAILED" in out


def test_module_entry_point_subprocess():
    completed = subprocess.run(
        [sys.executable, "-m", "arczeta", "beta", "x0", "--m", "2", "--M", "2"],
        capture_output=True,
        text=True,
    )
    assert completed.returncode == 0
    assert completed.stdout.strip() == "u^3 + u^2 - u"
