import json

import pytest

from gradedhilbert.cli import (
    InputError,
    JobSpec,
    dims_from_json,
    group_from_json,
    main,
    parse_preset,
    run,
)
from gradedhilbert.groups import cyclic, dihedral, direct_product, symmetric
from gradedhilbert.poly import IntPoly, RatFun, expand


def _run_json(capsys, *argv):
    code = main([*argv, "--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_z2_ones_all_checks(capsys):
    code, rep = _run_json(capsys, "--group", "cyclic:2", "--dims", '{"0":1,"1":1}', "--check", "all")
    assert code == 0
    assert rep["series"] == {"num": ["1", "-1"], "den": ["1", "-2"]}
    assert rep["verdict"]["finitely_generated"] is False
    assert rep["verdict"]["reason"] == "InverseNotPolynomial"
    assert set(rep["checks"]) == {"oracle", "structure", "fg", "components"}
    assert all(c["passed"] for c in rep["checks"].values())
    assert rep["components"]["1"] == {"num": ["0", "1"], "den": ["1", "-2"]}


def test_z2_trivial(capsys):
    code, rep = _run_json(capsys, "--group", "cyclic:2", "--dims", '{"1":2}')
    assert code == 0
    assert rep["series"] == {"num": ["1"], "den": ["1", "0", "-4"]}
    assert rep["verdict"]["finitely_generated"] is True
    assert rep["verdict"]["reason"] == "TrivialGrading"
    assert rep["generators"]["count"] == "4"


def test_non_associative_table(tmp_path, capsys):
    spec = {
        "kind": "table",
        "table": [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]],
    }
    path = tmp_path / "loop.json"
    path.write_text(json.dumps(spec))
    code = main(["--group", str(path), "--dims", "{}"])
    err = capsys.readouterr().err
    assert code == 1
    assert "associativity fails for triple" in err


def test_all_integers_are_strings(capsys):
    _, rep = _run_json(capsys, "--group", "symmetric:3", "--dims", '{"()":2,"(1 2)":1}', "--expand", "8")

    def walk(x):
        if isinstance(x, dict):
            for k, v in x.items():
                if k != "timing_ms":
                    walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)
        else:
            assert not isinstance(x, int) or isinstance(x, bool), x

    walk(rep)
    assert isinstance(rep["timing_ms"], (int, float))


def test_deterministic_report():
    g = dihedral(4)
    job = JobSpec(group=g, dims=dims_from_json(g, {"e": 1, "r": 2, "s": 1}), checks=("oracle", "structure", "fg", "components"))
    a, b = run(job), run(job)
    assert a.to_json(with_timing=False) == b.to_json(with_timing=False)


def test_report_round_trip():
    g = cyclic(5)
    job = JobSpec(group=g, dims=dims_from_json(g, {"0": 1, "2": 3, "4": 1}), expand_to=25)
    rep = run(job).data
    series = RatFun.from_json(rep["series"])
    assert [str(c) for c in expand(series, 25)] == rep["expansion"]


def test_big_integers_survive(capsys):
    _, rep = _run_json(capsys, "--group", "cyclic:3", "--dims", "[5,4,6]", "--expand", "40")
    assert int(rep["expansion"][40]) > 2**64
    series = RatFun(IntPoly.from_json(rep["series"]["num"]), IntPoly.from_json(rep["series"]["den"]))
    assert str(expand(series, 40)[40]) == rep["expansion"][40]


def test_presets():
    assert parse_preset("cyclic:6") == {"kind": "cyclic", "n": 6}
    spec = parse_preset("product:cyclic:2+cyclic:3")
    assert spec == {"kind": "product", "factors": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 3}]}
    assert group_from_json(spec) == direct_product(cyclic(2), cyclic(3))
    assert group_from_json({"kind": "symmetric", "n": 3}) == symmetric(3)
    with pytest.raises(InputError):
        parse_preset("klein")
    with pytest.raises(InputError):
        group_from_json({"kind": "symmetric", "n": 9})
    with pytest.raises(InputError):
        group_from_json({"kind": "nope"})


def test_dims_errors():
    g = cyclic(3)
    with pytest.raises(InputError, match="no element"):
        dims_from_json(g, {"x": 1})
    with pytest.raises(InputError, match="nonnegative"):
        dims_from_json(g, {"1": -1})
    with pytest.raises(InputError, match="out of range"):
        dims_from_json(g, {"7": 1})
    with pytest.raises(InputError):
        dims_from_json(g, [1, 2])
    assert dims_from_json(g, {"2": "5"}).dims == (0, 0, 5)


def test_bad_inputs_exit_1(capsys):
    assert main(["--group", "cyclic:2", "--dims", "{not json"]) == 1
    assert main(["--group", "cyclic:2", "--dims", "{}", "--check", "bogus"]) == 1
    assert main(["--group", "cyclic:2", "--dims", "{}", "--expand", "-1"]) == 1
    err = capsys.readouterr().err
    assert "--dims" in err and "--check" in err and "--expand" in err


def test_failed_check_exits_2(monkeypatch, capsys):
    import gradedhilbert.cli as cli
    from gradedhilbert.oracle import ComponentTable

    real = cli.tensor_dimensions

    def corrupted(g, dims, n):
        tab = real(g, dims, n)
        rows = [list(r) for r in tab.rows]
        rows[3][0] += 1
        return ComponentTable(tab.n_max, tuple(tuple(r) for r in rows))

    monkeypatch.setattr(cli, "tensor_dimensions", corrupted)
    code, rep = _run_json(capsys, "--group", "cyclic:2", "--dims", "[1,1]", "--check", "oracle")
    assert code == 2
    assert rep["checks"]["oracle"] == {"passed": False, "first_mismatch": "3"}


def test_text_output(capsys):
    code = main(["--group", "cyclic:4", "--dims", "[0,1,0,1]"])
    out = capsys.readouterr().out
    assert code == 0
    assert "P(t) = (1 - 2*t^2) / (1 - 4*t^2)" in out
    assert "(1 - 2*t) * (1 + 2*t)" in out
    assert "not finitely generated" in out
    assert "zero identity piece" in out


def test_quiet(capsys):
    assert main(["--group", "cyclic:2", "--dims", "[1,1]", "--quiet"]) == 0
    assert capsys.readouterr().out == ""


def test_zero_dims_structure_skipped(capsys):
    code, rep = _run_json(capsys, "--group", "cyclic:3", "--dims", "{}")
    assert code == 0
    assert rep["checks"]["structure"] == {"applicable": False, "passed": True}
    assert rep["series"] == {"num": ["1"], "den": ["1"]}
