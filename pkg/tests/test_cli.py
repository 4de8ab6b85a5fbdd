import json

import pytest

from ldbound.cli import Report, main
from ldbound.codefile import format_code, load_code, parse_code, save_code
from ldbound.linear import enumerate_codewords, hamming_code
from ldbound.spaces import Hamming, Rank


@pytest.fixture
def hamming74_file(tmp_path):
    words = enumerate_codewords(hamming_code(2, 3))
    path = tmp_path / "hamming74.code"
    save_code(words, str(path))
    return str(path)


def test_bound_exit_ok_and_summary(capsys):
    rc = main(["bound", "--space", "hamming", "--q", "2", "--n", "16",
               "--d", "3", "--L", "2"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "best size-upper: table-covering = 384" in out


def test_bound_json_report_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    rc = main(["bound", "--space", "hamming", "--q", "2", "--n", "16",
               "--d", "3", "--L", "2", "--json", str(out_path)])
    assert rc == 0
    text = out_path.read_text()
    report = Report.from_json(text)
    assert report.status == "ok"
    assert "Hamming" in report.query["space"]
    # round-trip identity on the serialized form
    assert json.loads(report.to_json()) == json.loads(text)


def test_bound_deterministic_output(capsys):
    argv = ["bound", "--space", "sumrank", "--q", "2",
            "--blocks", "2x2,2x2,2x2", "--rho", "1", "--L", "1"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    second = capsys.readouterr().out
    assert first == second and "sumrank-closed-form" in first


def test_bound_usage_error():
    # missing radius
    assert main(["bound", "--space", "hamming", "--q", "2", "--n", "8"]) == 2


def test_oracle_covering_radius(hamming74_file, capsys):
    rc = main(["oracle", "covering-radius", "--code", hamming74_file])
    out = capsys.readouterr().out
    assert rc == 0 and "quantity=covering-radius, value=1" in out


def test_oracle_profile_and_multiplicity(hamming74_file, capsys):
    rc = main(["oracle", "profile", "--code", hamming74_file, "--r", "1"])
    out = capsys.readouterr().out
    assert rc == 0 and "l1=1" in out and "l2=1" in out
    rc = main(["oracle", "multiplicity", "--code", hamming74_file, "--r", "1"])
    out = capsys.readouterr().out
    assert rc == 0 and "'fraction': '0/1'" in out


def test_oracle_mincover_exact(capsys):
    rc = main(["oracle", "mincover", "--space", "hamming", "--q", "2",
               "--n", "3", "--r", "1", "--mode", "exact"])
    out = capsys.readouterr().out
    assert rc == 0 and "size=2" in out


def test_oracle_budget_exit(tmp_path, capsys):
    rc = main(["oracle", "mincover", "--space", "hamming", "--q", "2",
               "--n", "6", "--r", "1", "--mode", "exact", "--nodes", "3",
               "--json", str(tmp_path / "budget.json")])
    assert rc == 3
    report = Report.from_json((tmp_path / "budget.json").read_text())
    assert report.status == "budget-exceeded"


def test_verify_suites_pass(capsys):
    assert main(["verify", "covering-bound", "--seed", "1",
                 "--trials", "3"]) == 0
    assert main(["verify", "chebyshev-cyclic", "--n-max", "5"]) == 0
    assert main(["verify", "insdel-example"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") >= 3


def test_verify_probabilistic(capsys):
    rc = main(["verify", "probabilistic", "--seed", "7", "--runs", "10",
               "--L", "2"])
    out = capsys.readouterr().out
    assert rc == 0 and "reported only" in out


def test_asympt_csv(tmp_path, capsys):
    path = tmp_path / "rates.csv"
    rc = main(["asympt", "--family", "hamming", "--q", "2",
               "--rho-min", "0.05", "--rho-max", "0.45", "--step", "0.05",
               "--csv", str(path)])
    assert rc == 0
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "rho,rate_threshold"
    assert len(lines) == 10  # header + 9 grid points


def test_unknown_quantity_usage():
    with pytest.raises(SystemExit) as e:
        main(["oracle", "nonsense"])
    assert e.value.code == 2


def test_codefile_roundtrip(hamming74_file):
    code = load_code(hamming74_file)
    text = format_code(code)
    again = parse_code(text)
    assert again.space == code.space
    assert again.codewords == code.codewords


def test_codefile_rank_roundtrip():
    code = parse_code(
        "space rank q=2 n=2 m=2\n"
        "1 0;0 1\n"
        "0 0;0 0\n"
    )
    assert code.space == Rank(2, 2, 2)
    assert ((1, 0), (0, 1)) in code.codewords
    assert parse_code(format_code(code)).codewords == code.codewords


def test_codefile_rejects_garbage():
    with pytest.raises(ValueError):
        parse_code("space hamming q=2 n=3\n0 1 2\n")
    with pytest.raises(ValueError):
        parse_code("no header here\n")
