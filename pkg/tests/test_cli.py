import json

from fusionring.cli import main


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fusion_table_g2_level_one(capsys, tmp_path):
    code, out, _ = run(capsys, ["fusion", "--group", "G2", "--level", "1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["basis"] == [[0, 0], [1, 0]]
    assert payload["table"]["(1,0)*(1,0)"] == [[[0, 0], 1], [[1, 0], 1]]
    assert payload["version"]
    # csv format includes one row per basis weight
    out_file = tmp_path / "table.csv"
    code = main(["fusion", "--group", "G2", "--level", "1", "--format", "csv",
                 "--out", str(out_file)])
    assert code == 0
    lines = out_file.read_text().strip().splitlines()
    assert len(lines) == 3


def test_fusion_vacuum_table(capsys):
    code, out, _ = run(capsys, ["fusion", "--group", "A1", "--level", "0"])
    assert code == 0
    payload = json.loads(out)
    assert payload["basis"] == [[0]]
    assert payload["table"] == {"(0)*(0)": [[[0], 1]]}


def test_json_reports_are_byte_stable(capsys):
    code1, out1, _ = run(capsys, ["census", "--group", "F4"])
    code2, out2, _ = run(capsys, ["census", "--group", "F4"])
    assert code1 == code2 == 0
    assert out1 == out2
    code1, out1, _ = run(capsys, ["fusion", "--group", "G2", "--level", "2"])
    code2, out2, _ = run(capsys, ["fusion", "--group", "G2", "--level", "2"])
    assert out1 == out2
    payload = json.loads(out1)
    assert len(payload["basis"]) == 4 and len(payload["table"]) == 16


def test_verify_g2_exit_codes(capsys):
    code, out, _ = run(capsys, ["verify-g2", "--level", "1", "--primes", "2,3"])
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["verdict"] == "pass"
    code, _, err = run(capsys, ["verify-g2", "--level", "0"])
    assert code == 2


def test_invalid_inputs_exit_two(capsys):
    assert run(capsys, ["fusion", "--group", "Z9", "--level", "1"])[0] == 2
    assert run(capsys, ["fusion", "--group", "E9", "--level", "1"])[0] == 2
    assert run(capsys, ["fusion", "--group", "G2", "--level", "-1"])[0] == 2
    assert run(capsys, ["complex", "--group", "G2", "--level", "3",
                        "--truncation", "1"])[0] == 2
    assert run(capsys, ["bases-check", "--group", "A2"])[0] == 2


def test_census_command(capsys):
    code, out, _ = run(capsys, ["census", "--group", "E7"])
    assert code == 0
    payload = json.loads(out)
    assert payload["counts_by_twist_order"]["2"]["total"] == 14
    code, out, _ = run(capsys, ["census", "--group", "A5"])
    payload = json.loads(out)
    assert payload["entries"] == []
    code, out, _ = run(capsys, ["census", "--group", "E8"])
    payload = json.loads(out)
    assert payload["counts_by_twist_order"]["2"]["beyond_vertices"] == 25


def test_complex_command(capsys):
    code, out, _ = run(capsys, ["complex", "--group", "G2", "--level", "3"])
    assert code == 0
    payload = json.loads(out)
    assert payload["complex"]["ranks"] == [6, 18, 12]
    assert payload["complex"]["euler_characteristic"] == 0
    assert payload["d_squared"]["passed"]
    assert payload["cokernel"]["passed"]
    assert payload["cokernel"]["fusion_rank"] == 6


def test_presentation_command(capsys):
    code, out, _ = run(capsys, ["presentation", "--group", "A1", "--level", "7",
                                "--primes", "2,3,5"])
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["codim_Q"] == 8
    assert payload["report"]["verdict"] == "pass"


def test_bases_check_command(capsys):
    code, out, _ = run(capsys, ["bases-check", "--group", "G2"])
    assert code == 0
    payload = json.loads(out)
    assert [c["module_rank"] for c in payload["checks"]] == [12, 6, 6, 2, 3, 3]
    assert all(c["passed"] for c in payload["checks"])


def test_verlinde_command(capsys):
    code, out, _ = run(capsys, ["verlinde", "--group", "A2", "--level", "2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["passed"]


def test_internal_limit_exits_three(capsys, monkeypatch):
    from fusionring.errors import InternalLimitError
    import fusionring.cli as cli

    def boom(*args, **kwargs):
        raise InternalLimitError("window too small")

    monkeypatch.setattr(cli, "extract_presentation", boom)
    code, _, err = run(capsys, ["presentation", "--group", "A1", "--level", "2"])
    assert code == 3
    assert "internal limit" in err
