import json

import jsonschema
import pytest

import qfrob.qsymbolic
import qfrob.repkernel
from qfrob.cli import RunConfig, main, output_schema, render_text
from qfrob.qsymbolic.verify import printed_variants


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    data = json.loads(out)
    jsonschema.validate(data, output_schema(argv[0]))
    return code, data


def test_report_b2(capsys):
    code, data = run_json(capsys, "report", "--type", "B2", "--lattice", "sc", "--order", "4")
    assert code == 0
    assert data["l_values"] == [2, 2, 1, 1]
    assert data["dual"]["dual_type"] == "C2"
    assert data["cardinalities"]["dim_ubar"] == 32
    assert data["rho_l"] == [1, 0]


def test_report_with_weight_and_text(capsys):
    code, data = run_json(capsys, "report", "--type", "A1", "--order", "6", "--weight", "7")
    assert code == 0 and data["decompositions"][0]["lambda0"] == [1]
    code, text, _ = run(capsys, "report", "--type", "A1", "--order", "6", "--format", "text")
    assert code == 0 and "dim_ubar: 27" in text
    _, plain = run_json(capsys, "report", "--type", "A1", "--order", "6")
    assert text == render_text(plain)


def test_decompose(capsys):
    code, data = run_json(capsys, "decompose", "--type", "A1", "--order", "6", "--weight", "7")
    assert code == 0
    assert data["lambda0"] == [1] and data["lambda1"] == [6]
    assert data["rho_l"] == [2] and data["is_restricted"] is False


def test_dual(capsys):
    code, data = run_json(capsys, "dual", "--type", "B3", "--order", "4")
    assert code == 0 and data["dual_type"] == "C3"
    code, data = run_json(capsys, "dual", "--type", "A1", "--q-exponents", "1@6")
    assert data["epsilon"] == [-1] and data["index_x_xstar"] == 3


def test_dims(capsys):
    code, data = run_json(capsys, "dims", "--type", "G2", "--order", "4")
    assert code == 0 and set(data["delta_l"]) == {"2a+b", "b", "a"}
    assert any(r.startswith("E[2a+b] = ") for r in data["recipes"])


def test_verify_appendix(capsys):
    code, data = run_json(capsys, "verify", "appendix", "--type", "G2", "--order", "4")
    assert code == 0 and data and all(v["status"] == "PASS" for v in data)


def test_verify_failure_exit(capsys, monkeypatch):
    monkeypatch.setattr(qfrob.qsymbolic, "verify_appendix_braid", lambda *a: printed_variants())
    code, data = run_json(capsys, "verify", "appendix", "--type", "G2", "--order", "4")
    assert code == 1 and any(v["status"] == "FAIL" and v["witness"] is not None for v in data)


def test_modules(capsys):
    code, data = run_json(capsys, "modules", "verma", "--type", "A1", "--order", "6", "--weight", "0")
    assert code == 0 and data["dimension"] == 3 and data["weight_support"] == [[0], [2], [4]]
    code, data = run_json(capsys, "modules", "simple", "--type", "B2", "--order", "4", "--weight", "1,0")
    assert code == 0 and data["dimension"] == 4
    code, data = run_json(capsys, "modules", "steinberg", "--type", "A1", "--order", "4")
    assert code == 0 and data["dimension"] == 2 and len(data["verdicts"]) >= 6
    code, data = run_json(capsys, "modules", "ext", "--type", "A1", "--order", "6", "--weight", "2")
    assert code == 0 and all(row["ext1_L_to_mu"]["dimension"] == 0 for row in data["ext1"])


def test_modules_steinberg_failure(capsys, monkeypatch):
    bad = [{"identity_id": "x", "status": "FAIL", "window_height": None, "witness": {}}]
    monkeypatch.setattr(qfrob.repkernel, "steinberg_suite", lambda ctx, seed: bad)
    code, _, _ = run(capsys, "modules", "steinberg", "--type", "A1", "--order", "4")
    assert code == 1


def test_sweep(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["sweep", "--out", str(a)]) == 0
    assert main(["sweep", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    jsonschema.validate(data, output_schema("sweep"))
    assert data["count"] == 48 and len(data["records"]) == 48
    assert main(["sweep", "--type", "B3", "--orders", "4", "--out", str(a)]) == 0
    rec = json.loads(a.read_text())["records"][0]
    assert rec["l"] == [2] and rec["dual"]["dual_type"] == "C3"


def test_lattice_file(capsys, tmp_path):
    f = tmp_path / "x.json"
    f.write_text("[[2, -1], [-1, 2]]")
    code, data = run_json(capsys, "report", "--type", "A2", "--lattice", str(f), "--order", "4")
    _, adj = run_json(capsys, "report", "--type", "A2", "--lattice", "adj", "--order", "4")
    assert code == 0 and data["lattice"] == adj["lattice"] and data["cardinalities"] == adj["cardinalities"]
    f.write_text("[[2, 0], [0, 2]]")
    assert run(capsys, "report", "--type", "A2", "--lattice", str(f), "--order", "4")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["report", "--type", "Z9", "--order", "4"],
        ["report", "--type", "A1"],
        ["report", "--type", "A1", "--order", "0"],
        ["report", "--type", "A1", "--order", "x"],
        ["report", "--type", "A1", "--q-exponents", "1@"],
        ["report", "--type", "A1", "--order", "4", "--lattice", "missing-file"],
        ["decompose", "--type", "A1", "--order", "6", "--weight", "-1"],
        ["decompose", "--type", "A2", "--order", "6", "--weight", "1"],
        ["decompose", "--type", "A1", "--order", "6"],
        ["modules", "simple", "--type", "A3", "--order", "4", "--weight", "1,1,1"],
        ["verify", "pbw", "--type", "B9"],
        ["sweep", "--orders", "5..2"],
        ["nonsense"],
        [],
    ],
)
def test_input_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_config_round_trip():
    cfg = RunConfig("report", "B2", orders=[4], weight=[1, 0], seed=3)
    assert RunConfig.from_json(json.loads(json.dumps(cfg.to_json()))) == cfg
