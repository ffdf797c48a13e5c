"""Command-line interface: reports, JSON schema, exit codes, determinism."""

import json

import pytest

from edense import core
from edense.cli import main

from conftest import fx


@pytest.fixture()
def z3e_file(tmp_path):
    path = tmp_path / "z3e.tbl"
    path.write_text(core.format_cayley_table(fx("Z3E")))
    return str(path)


@pytest.fixture()
def z6_file(tmp_path):
    path = tmp_path / "z6.tbl"
    path.write_text(core.format_cayley_table(fx("Z6")))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_analyze_text(capsys, z3e_file):
    code, out = run(capsys, "analyze", z3e_file)
    assert code == 0
    assert "[PASS] e-unitary  [True]" in out
    assert "[PASS] idempotents  [0 3]" in out


def test_analyze_json_schema(capsys, z3e_file):
    code, out = run(capsys, "analyze", z3e_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["command"].startswith("analyze")
    for f in payload["findings"]:
        assert set(f) <= {"name", "pass", "witness"}
        assert isinstance(f["pass"], bool)


def test_analyze_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.tbl"
    bad.write_text("3\n0 0 0\n0 1\n0 1 2\n")
    code, out = run(capsys, "analyze", str(bad))
    assert code == 1
    assert "ParseError" in out and "line 3" in out


def test_analyze_non_associative(capsys, tmp_path):
    bad = tmp_path / "bad.tbl"
    bad.write_text("2\n1 1\n1 0\n")
    code, out = run(capsys, "analyze", str(bad))
    assert code == 1
    assert "NonAssociative" in out


def test_cosets_command(capsys, z3e_file):
    code, out = run(capsys, "cosets", z3e_file, "--subsemigroup", "0 3")
    assert code == 0
    assert "0 3\n1 4\n2 5" in out
    assert "[PASS] quotient-group  [order 3]" in out


def test_cosets_group_subgroup(capsys, z6_file):
    code, out = run(capsys, "cosets", z6_file, "--subsemigroup", "0 2 4")
    assert code == 0
    assert "[PASS] base-valid  [2 cosets]" in out


def test_cosets_bad_base(capsys, z3e_file):
    code, out = run(capsys, "cosets", z3e_file, "--subsemigroup", "3")
    assert code == 1
    assert "BadSubsemigroup" in out and "upward closed" in out


def test_act_command(capsys, z3e_file):
    code, out = run(capsys, "act", z3e_file, "--carrier", "3 4 5")
    assert code == 0
    assert "[PASS] locally-free  [True]" in out
    assert "[PASS] grading  [3 3 3]" in out


def test_act_munn(capsys, z3e_file):
    code, out = run(capsys, "act", z3e_file, "--munn")
    assert code == 0
    assert "[PASS] act-valid  [2 points]" in out


def test_act_file_roundtrip(capsys, tmp_path, z3e_file):
    from edense import acts

    S = fx("Z3E")
    rows, labels = acts.left_mult_total(S, [3, 4, 5])
    wp = acts.wagner_preston(S, rows, labels)
    act_path = tmp_path / "eg.act"
    act_path.write_text(acts.format_act(wp))
    code, out = run(capsys, "act", z3e_file, "--act-file", str(act_path))
    assert code == 0
    assert "[PASS] transitive  [True]" in out


def test_build_cu_derived(capsys, z6_file):
    code, out = run(capsys, "build-cu", "--group", z6_file)
    assert code == 0
    assert "[PASS] pair-monoid  [order 6]" in out


def test_build_cu_adjoin_band(capsys, z6_file):
    code, out = run(capsys, "build-cu", "--group", z6_file, "--adjoin-band", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    by_name = {f["name"]: f for f in payload["findings"]}
    assert by_name["pair-monoid"]["witness"] == "order 12"
    assert by_name["e-unitary-dense"]["pass"] is True


def test_crypto_demo_prime_deterministic(capsys):
    code1, out1 = run(capsys, "crypto-demo", "--prime", "11", "--protocol", "mo", "--seed", "1")
    code2, out2 = run(capsys, "crypto-demo", "--prime", "11", "--protocol", "mo", "--seed", "1")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "recovered-plaintext" in out1


def test_crypto_demo_fixture_key_sizes(capsys):
    code, out = run(capsys, "crypto-demo", "--fixture", "Z3E", "--protocol", "elgamal", "--seed", "3")
    assert code == 0
    assert "[PASS] key-space-sizes  [2]" in out


def test_crypto_demo_not_prime(capsys):
    code, out = run(capsys, "crypto-demo", "--prime", "4", "--seed", "0")
    assert code == 1
    assert "NotPrime" in out


def test_verify_table(capsys, z3e_file):
    code, out = run(capsys, "verify", z3e_file, "--suite", "cosets")
    assert code == 0
    assert "cosets.orbit-stabilizer" in out


def test_verify_corpus_all(capsys):
    code, out = run(capsys, "verify", "--corpus")
    assert code == 0
    assert "[FAIL]" not in out
    assert "core.small-order-sweep" in out


def test_verify_needs_target(capsys):
    with pytest.raises(SystemExit):
        main(["verify"])


def test_verify_corrupted_table(capsys, tmp_path):
    bad = tmp_path / "bad.tbl"
    bad.write_text("2\n1 1\n1 0\n")
    code, out = run(capsys, "verify", str(bad))
    assert code == 1
    assert "NonAssociative" in out


def test_verify_table_crypto_suite(capsys, z3e_file):
    code, out = run(capsys, "verify", z3e_file, "--suite", "crypto")
    assert code == 0
    assert "crypto.key-space-theorem" in out


def test_build_cu_category_file(capsys, tmp_path):
    from test_construction import DERIVED_Z2_FILE

    cat = tmp_path / "derived_z2.cat"
    cat.write_text(DERIVED_Z2_FILE)
    grp = tmp_path / "z2.tbl"
    grp.write_text(core.format_cayley_table(fx("Z2")))
    code, out = run(capsys, "build-cu", "--group", str(grp), "--category", str(cat))
    assert code == 0
    assert "[PASS] pair-monoid  [order 2]" in out
