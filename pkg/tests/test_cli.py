from fractions import Fraction

import pytest

from unitsum import cli, identity


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_text_n6(capsys):
    code, out, _ = run(capsys, ["table", "6"])
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 11
    assert lines[0] == "6 0 0 0 0 0 720"
    assert lines[-1] == "0 0 0 0 0 1 6"


def test_table_json_n1(capsys):
    code, out, _ = run(capsys, ["table", "1", "--format", "json"])
    assert code == 0
    assert out == '{"n":1,"rows":[{"alpha":[1],"denominator":"1"}]}\n'


def test_table_csv_n5(capsys):
    code, out, _ = run(capsys, ["table", "5", "--format", "csv"])
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "alpha_1,alpha_2,alpha_3,alpha_4,alpha_5,denominator"
    assert len(lines) == 1 + 7


def test_verify_pass(capsys):
    code, out, err = run(capsys, ["verify", "6"])
    assert code == 0
    assert out == "n=6 sum=1/1 verdict=pass\n"
    assert "route direct" in err  # timing goes to stderr only


def test_verify_prints_witness_fraction_on_failure(capsys, monkeypatch):
    monkeypatch.setattr(identity, "reciprocal_sum", lambda *a, **k: Fraction(2, 3))
    code, out, _ = run(capsys, ["verify", "6"])
    assert code == 2
    assert out == "n=6 sum=2/3 verdict=fail\n"


@pytest.mark.parametrize(
    "n,expected",
    [("3", "2 3 6"), ("4", "3 4 4 8 24"), ("6", "5 6 6 8 8 16 18 18 48 48 720")],
)
def test_decompose_sorted(capsys, n, expected):
    code, out, _ = run(capsys, [ "decompose", n, "--sorted"])
    assert code == 0
    assert out == expected + "\n"


def test_decompose_enumeration_order_matches_table(capsys):
    code, out, _ = run(capsys, ["decompose", "6"])
    assert code == 0
    assert out == "720 48 18 16 8 6 5 48 8 18 6\n"


def test_decompose_json(capsys):
    code, out, _ = run(capsys, ["decompose", "3", "--format", "json"])
    assert code == 0
    assert out == '{"n":3,"denominators":["6","2","3"]}\n'


def test_oracle_all_routes(capsys):
    code, out, _ = run(capsys, ["oracle", "6"])
    assert code == 0
    assert out.splitlines() == [
        "n=6 route=direct result=1/1",
        "n=6 route=poly result=1/1",
        "n=6 route=perm result=match",
        "n=6 verdict=pass",
    ]


def test_oracle_json_subset(capsys):
    code, out, _ = run(
        capsys, ["oracle", "12", "--routes", "direct,poly", "--format", "json"]
    )
    assert code == 0
    assert out == (
        '{"n":12,"routes":["direct","poly"],'
        '"results":{"direct":"1/1","poly":"1/1"},"verdict":"pass"}\n'
    )


def test_oracle_perm_range_error(capsys):
    code, _, err = run(capsys, ["oracle", "12", "--routes", "perm"])
    assert code == 3
    assert "perm route" in err


def test_oracle_unknown_route(capsys):
    code, _, err = run(capsys, ["oracle", "6", "--routes", "direct,magic"])
    assert code == 3
    assert "magic" in err


def test_range_violations_exit_3(capsys):
    assert run(capsys, ["verify", "0"])[0] == 3
    assert run(capsys, ["verify", "81"])[0] == 3
    assert run(capsys, ["table", "200"])[0] == 3


def test_max_n_gate_applies_uniformly(capsys):
    assert run(capsys, ["--max-n", "5", "verify", "6"])[0] == 3
    assert run(capsys, ["--max-n", "5", "decompose", "6"])[0] == 3
    code, out, _ = run(capsys, ["--max-n", "100", "table", "1"])
    assert code == 0 and out.splitlines() == ["1 1"]


def test_unknown_format_rejected(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["table", "6", "--format", "xml"])
    assert excinfo.value.code == 3
    capsys.readouterr()


def test_thread_count_does_not_change_stdout(capsys):
    _, serial, _ = run(capsys, ["verify", "12", "--threads", "1"])
    _, threaded, _ = run(capsys, ["verify", "12", "--threads", "3"])
    assert serial == threaded
