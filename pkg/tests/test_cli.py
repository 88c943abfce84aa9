import json

import pytest

from blockperm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_map_w_golden(capsys):
    code, out, _ = run(capsys, "map", "w", "--perm", "236|14578")
    assert code == 0
    assert out == "2346|1578\n"


def test_map_swap_golden(capsys):
    code, out, _ = run(capsys, "map", "swap", "--index", "2", "--perm", "1|37|2458|6")
    assert code == 0
    assert out == "1|3478|25|6\n"


def test_map_swap_trace_json(capsys):
    code, out, _ = run(
        capsys, "map", "swap", "--index", "2", "--perm", "1|37|2458|6",
        "--trace", "--json",
    )
    assert code == 0
    body = json.loads(out)
    assert body["perm"] == "1|3478|25|6"
    assert body["trace"][0]["after"] == "1|347|258|6"


def test_count_golden(capsys):
    code, out, _ = run(capsys, "count", "--k", "1", "--comp", "1,1,1")
    assert code == 0
    assert out == "5\n"


def test_count_lis(capsys):
    code, out, _ = run(capsys, "count", "--lis", "6", "--comp", "3,5")
    assert code == 0
    assert out == "20\n"


def test_count_table_csv(capsys):
    code, out, _ = run(capsys, "count", "--comp", "2,2", "--table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "comp,param,count"
    assert '"2,2",h=3,3' in lines


def test_map_sort_identity(capsys):
    code, out, _ = run(capsys, "map", "sort", "--target", "2,2", "--perm", "13|24")
    assert code == 0
    assert out == "13|24\n"


def test_enumerate_canonical(capsys):
    code, out, _ = run(capsys, "enumerate", "--comp", "2,2", "--lis", "3")
    assert code == 0
    assert out == "1,3|2,4\n1,4|2,3\n2,3|1,4\n"


def test_tableau_count(capsys):
    code, out, _ = run(
        capsys, "tableau", "count", "--outer", "7,7,7,7,4", "--inner", "2"
    )
    assert code == 0
    assert out == "27754983956700\n"


def test_tableau_diagram(capsys):
    code, out, _ = run(
        capsys, "tableau", "count", "--outer", "2,1", "--inner", "1", "--diagram"
    )
    assert code == 0
    assert out == "2\n. #\n#\n"


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "catalan", "--max-size", "5")
    assert code == 0
    assert "PASS catalan-closed-forms" in out
    assert out.strip().endswith("suite catalan: PASSED")


def test_verify_json(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "catalan", "--max-size", "4", "--json"
    )
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_failure_exits_one(capsys, monkeypatch):
    import importlib

    service_app = importlib.import_module("blockperm.service.app")
    from blockperm.verify import Check, SuiteReport

    def broken(suite, max_size):
        return SuiteReport(suite, [Check("stub", False, "forced", "cex")])

    monkeypatch.setattr(service_app, "run_suite", broken)
    code, out, _ = run(capsys, "verify", "--suite", "catalan")
    assert code == 1
    assert "FAIL stub" in out
    code, out, _ = run(capsys, "verify", "--suite", "catalan", "--json")
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_domain_error_exits_one(capsys):
    code, out, err = run(capsys, "map", "w", "--perm", "34|12")
    assert code == 1
    assert out == ""
    assert "error:" in err


def test_usage_errors_exit_two(capsys):
    code, _, err = run(capsys, "count", "--comp", "1,1")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "map", "swap", "--perm", "12|34")
    assert code == 2 and "--index" in err
    code, _, err = run(capsys, "map", "inject", "--perm", "12|34")
    assert code == 2 and "--target" in err
    code, _, err = run(capsys, "count", "--comp", "x,y", "--k", "1")
    assert code == 2
    code, _, _ = run(capsys, "bogus")
    assert code == 2


def test_map_output_reparses(capsys):
    import blockperm as bp

    code, out, _ = run(
        capsys, "map", "inject", "--perm", "1234|5", "--target", "3,2"
    )
    assert code == 0
    assert bp.parse(out.strip()).comp == (3, 2)


def test_json_flag_on_count(capsys):
    code, out, _ = run(capsys, "count", "--k", "1", "--comp", "1,1,1", "--json")
    assert code == 0
    assert json.loads(out)["count"] == 5
