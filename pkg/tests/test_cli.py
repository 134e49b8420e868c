import json

from liecoh.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_emit_then_check(tmp_path, capsys):
    out = str(tmp_path / "h3.lie")
    code, stdout, _ = run_cli(capsys, "emit", "h3", out)
    assert code == 0
    assert "wrote h3" in stdout
    code, stdout, _ = run_cli(capsys, "check", out)
    assert code == 0
    assert "nilpotent (index 2)" in stdout
    assert "center dim: 1" in stdout
    assert "lower central dims: 3 1 0" in stdout


def test_check_abelian(tmp_path, capsys):
    path = write(tmp_path, "ab.lie", "dim 2\n")
    code, stdout, _ = run_cli(capsys, "check", path)
    assert code == 0
    assert "nilpotent (index 1)" in stdout


def test_check_r4_reports_solvable(tmp_path, capsys):
    code, _, _ = run_cli(capsys, "emit", "r4", str(tmp_path / "r4.lie"))
    assert code == 0
    code, stdout, _ = run_cli(capsys, "check", str(tmp_path / "r4.lie"))
    assert code == 0
    assert "solvable, non-nilpotent (derived length 2)" in stdout


def test_check_json_structure(tmp_path, capsys):
    path = write(tmp_path, "h3.lie", "dim 3\n[1,2] = 3\n")
    code, stdout, _ = run_cli(capsys, "check", path, "--json")
    assert code == 0
    doc = json.loads(stdout)
    assert set(doc) == {"input", "computed", "warnings"}
    assert doc["computed"]["nilpotency_index"] == 2
    assert doc["computed"]["lower_central_dims"] == [3, 1, 0]


def test_parse_error_exit_code(tmp_path, capsys):
    path = write(tmp_path, "bad.lie", "dim 3\nwhat even\n")
    code, stdout, stderr = run_cli(capsys, "check", path)
    assert code == 1
    assert "error:" in stderr
    assert ":2" in stderr  # line number surfaces


def test_jacobi_error_exit_code(tmp_path, capsys):
    path = write(tmp_path, "bad.lie", "dim 3\n[1,2]=1\n[1,3]=2\n")
    code, _, stderr = run_cli(capsys, "check", path)
    assert code == 1
    assert "Jacobi" in stderr


def test_cohomology_table_and_claim(tmp_path, capsys):
    run_cli(capsys, "emit", "h5", str(tmp_path / "h5.lie"))
    code, stdout, _ = run_cli(
        capsys, "cohomology", str(tmp_path / "h5.lie"), "--coefficients", "abelianization"
    )
    assert code == 0
    assert "claimed dim H^2 (h5): 6; computed: 20 -> agrees: NO" in stdout


def test_cohomology_json_claim_fields(tmp_path, capsys):
    run_cli(capsys, "emit", "h5", str(tmp_path / "h5.lie"))
    code, stdout, _ = run_cli(
        capsys,
        "cohomology",
        str(tmp_path / "h5.lie"),
        "--coefficients",
        "abelianization",
        "--json",
    )
    doc = json.loads(stdout)
    assert doc["paper_claim"] == {"table_row": "h5", "dim_h2": 6}
    assert doc["agrees"] is False
    h2_row = [r for r in doc["computed"]["table"] if r["p"] == 2][0]
    assert h2_row["dim_h"] == 20 and h2_row["dim_b"] == 4


def test_cohomology_degree_filter_and_default_coefficients(tmp_path, capsys):
    path = write(tmp_path, "ab2.lie", "dim 2\n")
    code, stdout, _ = run_cli(capsys, "cohomology", path, "--degree", "1", "--json")
    doc = json.loads(stdout)
    assert doc["computed"]["coefficients"] == "trivial:1"
    assert doc["computed"]["table"] == [
        {"p": 1, "dim_c": 2, "dim_z": 2, "dim_b": 0, "dim_h": 2}
    ]


def test_cohomology_representatives(tmp_path, capsys):
    path = write(tmp_path, "h3.lie", "basis X Y Z\ndim 3\n[1,2]=3\n")
    code, stdout, _ = run_cli(
        capsys, "cohomology", path, "--representatives", "--degree", "1"
    )
    assert code == 0
    assert "class representatives" in stdout
    assert "X*" in stdout


def test_cohomology_unknown_coefficients(tmp_path, capsys):
    path = write(tmp_path, "h3.lie", "dim 3\n[1,2]=3\n")
    code, _, stderr = run_cli(capsys, "cohomology", path, "--coefficients", "weights")
    assert code == 1
    assert "unknown coefficients" in stderr


def test_classify_flags(tmp_path, capsys):
    path = write(tmp_path, "n4.lie", "dim 4\n[1,2]=3\n[1,3]=4\n")
    code, stdout, _ = run_cli(capsys, "classify", path)
    assert code == 0
    assert "computed dim H^2(g, g/[g,g]) = 4" in stdout
    assert "class: II" in stdout
    assert "agrees: NO" in stdout


def test_classify_abelian_warns_but_computes(tmp_path, capsys):
    path = write(tmp_path, "ab4.lie", "dim 4\n")
    code, stdout, _ = run_cli(capsys, "classify", path, "--json")
    assert code == 0
    doc = json.loads(stdout)
    assert doc["computed"]["dim_h2"] == 24
    assert any("abelian" in w for w in doc["warnings"])


def test_pair_les_table(tmp_path, capsys):
    path = write(tmp_path, "h3.lie", "dim 3\n[1,2]=3\n")
    code, stdout, _ = run_cli(capsys, "pair", path, "--subalgebra", "3")
    assert code == 0
    assert "exact at every node: yes" in stdout


def test_pair_vector_subalgebra(tmp_path, capsys):
    path = write(tmp_path, "h3.lie", "dim 3\n[1,2]=3\n")
    code, stdout, _ = run_cli(
        capsys, "pair", path, "--subalgebra", "0,0,1;0,1,0", "--json"
    )
    assert code == 0
    doc = json.loads(stdout)
    assert doc["computed"]["subalgebra_dim"] == 2
    assert doc["computed"]["all_exact"] is True


def test_pair_full_basis_kills_relative_cohomology(tmp_path, capsys):
    path = write(tmp_path, "h3.lie", "dim 3\n[1,2]=3\n")
    code, stdout, _ = run_cli(capsys, "pair", path, "--subalgebra", "1,2,3", "--json")
    assert code == 0
    doc = json.loads(stdout)
    assert all(row["dim_rel"] == 0 for row in doc["computed"]["les"])
    assert doc["computed"]["all_exact"] is True


def test_pair_rejects_non_subalgebra(tmp_path, capsys):
    path = write(tmp_path, "h3.lie", "dim 3\n[1,2]=3\n")
    code, _, stderr = run_cli(capsys, "pair", path, "--subalgebra", "1,2")
    assert code == 1
    assert "not a subalgebra" in stderr


def test_deform_flags_claim(tmp_path, capsys):
    run_cli(capsys, "emit", "family:n4_t", str(tmp_path / "f.lie"))
    code, stdout, _ = run_cli(
        capsys,
        "deform",
        str(tmp_path / "f.lie"),
        "--samples",
        "1,1/2,-1",
        "--claim",
        "solvable-non-nilpotent",
    )
    assert code == 0
    assert "jacobi in t: identically zero" in stdout
    assert "first-order term is a 2-cocycle (adjoint): yes" in stdout
    assert stdout.count("nilpotent (index 3)") == 3
    assert "agrees: NO" in stdout


def test_deform_json_verdicts(tmp_path, capsys):
    run_cli(capsys, "emit", "family:n4_t", str(tmp_path / "f.lie"))
    code, stdout, _ = run_cli(
        capsys, "deform", str(tmp_path / "f.lie"), "--samples", "2", "--json"
    )
    doc = json.loads(stdout)
    v = doc["computed"]["verdicts"][0]
    assert v["t"] == "2"
    assert v["kind"] == "nilpotent"
    assert v["lcs_dims"] == [4, 2, 1, 0]


def test_deform_constant_family(tmp_path, capsys):
    path = write(tmp_path, "c.lie", "dim 3\n[1,2] = (1 + 0*t)*3\n")
    code, stdout, _ = run_cli(capsys, "deform", path, "--samples", "0,5")
    assert code == 0
    assert stdout.count("nilpotent (index 2)") == 2


def test_deform_reports_defect_polynomials(tmp_path, capsys):
    path = write(tmp_path, "bad.lie", "dim 3\n[1,2]=3\n[2,3]=t*2\n")
    code, _, stderr = run_cli(capsys, "deform", path)
    assert code == 1
    assert "fails the Jacobi identity in t" in stderr
    assert "t" in stderr


def test_deform_claim_validation(tmp_path, capsys):
    run_cli(capsys, "emit", "family:n4_t", str(tmp_path / "f.lie"))
    code, _, stderr = run_cli(
        capsys, "deform", str(tmp_path / "f.lie"), "--claim", "rigid"
    )
    assert code == 1
    assert "unknown classification" in stderr


def test_audit_table1_json_records(capsys):
    code, stdout, _ = run_cli(capsys, "audit-table1", "--json")
    assert code == 0  # auditing, not testing: disagreement is not failure
    doc = json.loads(stdout)
    rows = doc["computed"]["rows"]
    assert len(rows) == 10
    assert all(isinstance(r["agrees"], bool) for r in rows)
    heis = doc["computed"]["heisenberg"]
    assert [r["computed_b2"] for r in heis] == [2, 4, 6, 8]
    assert doc["agrees"] is False


def test_audit_table1_human(capsys):
    code, stdout, _ = run_cli(capsys, "audit-table1")
    assert code == 0
    assert "h5     20" in stdout
    assert "(df)(x,y) = -f([x,y])" in stdout


def test_json_outputs_are_byte_stable(tmp_path, capsys):
    path = write(tmp_path, "h3.lie", "dim 3\n[1,2]=3\n")
    outputs = []
    for _ in range(2):
        code, stdout, _ = run_cli(capsys, "audit-table1", "--json")
        assert code == 0
        outputs.append(stdout)
    assert outputs[0] == outputs[1]
    outputs = []
    for _ in range(2):
        code, stdout, _ = run_cli(
            capsys, "cohomology", path, "--coefficients", "abelianization", "--json"
        )
        outputs.append(stdout)
    assert outputs[0] == outputs[1]


def test_emit_roundtrip_via_cli(tmp_path, capsys):
    out = str(tmp_path / "h5.lie")
    run_cli(capsys, "emit", "h5", out)
    from liecoh import builtin, load_algebra

    assert load_algebra(out) == builtin("h5").algebra


def test_emit_unknown_key_exit(tmp_path, capsys):
    code, _, stderr = run_cli(capsys, "emit", "so3", str(tmp_path / "x.lie"))
    assert code == 1
    assert "unknown catalog key" in stderr


def test_missing_file_is_input_error(capsys):
    code, _, stderr = run_cli(capsys, "check", "/nonexistent/path.lie")
    assert code == 1
    assert "error:" in stderr
