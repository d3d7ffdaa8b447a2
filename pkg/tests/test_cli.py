import json

import pytest

from fourspace import catalog as cat
from fourspace.cli import main
from fourspace.exactmat import PrimeField
from fourspace.homdim import CASE_SPECS
from fourspace.modules import module_direct_sum, module_from_record, module_to_record

GF = PrimeField(32003)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_module(tmp_path, module, name="m.json"):
    path = tmp_path / name
    path.write_text(json.dumps(module_to_record(module)))
    return str(path)


# -- catalog ---------------------------------------------------------------


def test_catalog_smallest_projective(capsys):
    code, out, _ = run(capsys, "catalog", "P(0,0)")
    rec = json.loads(out)
    assert code == 0
    assert rec["dim_vector"] == [1, 0, 0, 0, 0]
    assert all(rec[s]["cols"] == 0 for s in "ABCD")


def test_catalog_homogeneous_tube_module(capsys):
    code, out, _ = run(capsys, "catalog", "R(1,5)")
    rec = json.loads(out)
    assert code == 0
    assert rec["A"]["entries"] == ["1", "0"]
    assert rec["B"]["entries"] == ["0", "1"]
    assert rec["C"]["entries"] == ["1", "1"]
    assert rec["D"]["entries"] == ["5", "1"]


def test_catalog_rejects_special_lambda(capsys):
    code, out, err = run(capsys, "catalog", "R(1,0)")
    assert code != 0
    assert err.startswith("error: invalid-params:")
    assert "R(s,2,0)" in err


def test_catalog_output_reloads_as_module(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "I(2,3)", "--field", "prime:7")
    rec = json.loads(out)
    m = module_from_record(rec)  # dim_vector key must be ignored
    assert m == cat.build(cat.I(2, 3), PrimeField(7))


def test_module_file_roundtrip_is_identical(capsys):
    code, out, _ = run(capsys, "catalog", "R(0,3,inf)")
    rec = json.loads(out)
    m = module_from_record(rec)
    again = module_to_record(m)
    rec.pop("dim_vector")
    assert again == rec


# -- homdim ---------------------------------------------------------------


def test_homdim_explicit_descriptors(capsys, tmp_path):
    path = write_module(tmp_path, cat.build(cat.I(0, 0), GF))
    code, out, _ = run(capsys, "homdim", path, "I(0,0)", "P(0,0)")
    assert code == 0
    assert out.splitlines() == ["I(0,0)\t1", "P(0,0)\t0"]


def test_homdim_all_agrees_with_oracle_mode(capsys, tmp_path):
    path = write_module(tmp_path, cat.build(cat.R(1, PrimeField(7).coerce(2)), PrimeField(7)))
    args = ["homdim", path, "--all", "--max-n", "1", "--max-l", "1", "--lambda", "2"]
    code_a, out_a, _ = run(capsys, *args)
    code_b, out_b, _ = run(capsys, *args, "--oracle")
    assert code_a == code_b == 0
    assert out_a == out_b
    assert len(out_a.splitlines()) == 33


def test_homdim_requires_descriptors(capsys, tmp_path):
    path = write_module(tmp_path, cat.build(cat.P(0, 0), GF))
    code, _, err = run(capsys, "homdim", path)
    assert code != 0 and err.startswith("error: parse-error:")


def test_homdim_rejects_bad_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{broken")
    code, _, err = run(capsys, "homdim", str(path), "I(0,0)")
    assert code != 0 and err.startswith("error: parse-error:")


def test_homdim_missing_file(capsys):
    code, _, err = run(capsys, "homdim", "/nonexistent/m.json", "I(0,0)")
    assert code != 0 and err.startswith("error: io-error:")


# -- decompose ---------------------------------------------------------------


def test_decompose_repeated_summand(capsys, tmp_path):
    m = module_direct_sum(cat.build(cat.P(1, 0), GF), cat.build(cat.P(1, 0), GF))
    path = write_module(tmp_path, m)
    code, out, _ = run(capsys, "decompose", path, "--max-n", "2", "--max-l", "1")
    assert code == 0
    assert out.strip() == "2 × P(1,0)"


def test_decompose_missing_lambda_is_an_error(capsys, tmp_path):
    path = write_module(tmp_path, cat.build(cat.R(1, GF.coerce(2)), GF))
    code, _, err = run(capsys, "decompose", path,
                       "--max-n", "1", "--max-l", "1", "--lambda", "5")
    assert code != 0
    assert err.startswith("error: incomplete-candidates:")
    assert "residual hom vector" in err


def test_decompose_multiline_output_order(capsys, tmp_path):
    m = module_direct_sum(cat.build(cat.I(1, 1), GF), cat.build(cat.P(0, 3), GF))
    path = write_module(tmp_path, m)
    code, out, _ = run(capsys, "decompose", path, "--max-n", "1", "--max-l", "1")
    assert code == 0
    assert out.splitlines() == ["1 × P(0,3)", "1 × I(1,1)"]


# -- verify ---------------------------------------------------------------


def test_verify_zero_trials_vacuous(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "0", "--max-n", "0", "--max-l", "0")
    assert code == 0 and out.startswith("all agree")


def test_verify_small_clean_run(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "2", "--max-n", "1",
                       "--max-l", "1", "--seed", "7")
    assert code == 0 and "all agree" in out


def test_verify_catches_misplaced_block(capsys, monkeypatch):
    # off-by-one: the B block of the first pattern row drifts one cell right
    head = [list(row) for row in CASE_SPECS["P0"]["head"]]
    assert head[0][2] == ("B", 1) and head[0][3] is None
    head[0][2], head[0][3] = None, ("B", 1)
    mutated = dict(CASE_SPECS["P0"])
    mutated["head"] = head
    monkeypatch.setitem(CASE_SPECS, "P0", mutated)
    code, out, _ = run(capsys, "verify", "--trials", "2", "--max-n", "1",
                       "--max-l", "1", "--seed", "7")
    assert code != 0
    assert "mismatch" in out


def test_bad_field_spec(capsys):
    code, _, err = run(capsys, "catalog", "P(0,0)", "--field", "prime:6")
    assert code != 0 and err.startswith("error: parse-error:")


def test_bad_lambda_flag(capsys, tmp_path):
    path = write_module(tmp_path, cat.build(cat.P(0, 0), GF))
    code, _, err = run(capsys, "homdim", path, "--all", "--max-n", "0",
                       "--max-l", "0", "--lambda", "x")
    assert code != 0 and err.startswith("error: parse-error:")
