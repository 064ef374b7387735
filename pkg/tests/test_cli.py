"""End-to-end command-line behavior, including exit codes and determinism."""

import json
import subprocess
import sys

from seqcode import codec, witness


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "seqcode", *args],
        capture_output=True,
        input=stdin,
        timeout=300,
    )


def test_encode_decode_roundtrip():
    out = run_cli("encode", "5", "3")
    assert out.returncode == 0
    handle = json.loads(out.stdout)
    assert handle["len"] == "2"
    back = run_cli("decode", handle["len"], handle["w"])
    assert back.returncode == 0
    assert json.loads(back.stdout) == ["5", "3"]


def test_encode_empty():
    out = run_cli("encode")
    assert out.returncode == 0
    assert out.stdout == b'{"len":"0","w":"0"}\n'


def test_encode_single_entry_decodes_back():
    out = run_cli("encode", "7")
    handle = json.loads(out.stdout)
    assert codec.beta_total(int(handle["w"]), 0) == 7


def test_decode_fixed_values():
    assert json.loads(run_cli("decode", "2", "5544").stdout) == ["5", "3"]
    assert json.loads(run_cli("decode", "0", "99").stdout) == []
    assert json.loads(run_cli("decode", "1", "3").stdout) == ["0"]


def test_big_entries_cross_as_decimal_strings():
    big = str(2**200 + 17)
    handle = json.loads(run_cli("encode", big, "0").stdout)
    assert json.loads(run_cli("decode", handle["len"], handle["w"]).stdout) == [big, "0"]


def test_codes_beyond_the_default_int_str_cap_roundtrip():
    # a dozen 64-bit entries push the code past 4300 decimal digits
    entries = [str(2**64 - 1 - i) for i in range(12)]
    out = run_cli("encode", *entries)
    assert out.returncode == 0
    handle = json.loads(out.stdout)
    assert len(handle["w"]) > 4300
    back = run_cli("decode", handle["len"], handle["w"])
    assert back.returncode == 0
    assert json.loads(back.stdout) == entries


def test_append_verifies():
    out = run_cli("append", "--len", "0", "--w", "0", "--x", "7", "--json")
    assert out.returncode == 0
    obj = json.loads(out.stdout)
    assert obj == {"len": "1", "w": "203", "verified": True}


def test_parse_failures_exit_2():
    assert run_cli("encode", "12x").returncode == 2
    assert run_cli("decode", "-1", "3").returncode == 2
    assert run_cli("append", "--len", "0", "--w", "0", "--x", "1.5").returncode == 2


def test_verify_witness_valid_and_tampered(tmp_path):
    cert = witness.product_inverse(2, 6, 4)
    good = tmp_path / "good.json"
    good.write_text(json.dumps(cert.to_json()))
    assert run_cli("verify-witness", str(good)).returncode == 0

    tampered = cert.to_json()
    tampered["q"] = str(int(tampered["q"]) + 1)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(tampered))
    out = run_cli("verify-witness", str(bad))
    assert out.returncode == 1
    assert b"INVALID" in out.stdout


def test_verify_witness_stdin_and_garbage():
    wit = witness.factor_inverse(1, 3, 1)
    out = run_cli("verify-witness", stdin=json.dumps(wit.to_json()).encode())
    assert out.returncode == 0
    assert run_cli("verify-witness", stdin=b"not json").returncode == 2
    assert run_cli("verify-witness", stdin=b'{"type":"mystery"}').returncode == 2


def test_check_axioms_nat_passes():
    out = run_cli("check-axioms", "--model", "nat", "--samples", "50", "--seed", "7")
    assert out.returncode == 0
    assert out.stdout.count(b"pass") == 13


def test_check_axioms_polynat_with_subtraction():
    out = run_cli(
        "check-axioms", "--model", "polynat", "--samples", "50", "--seed", "1",
        "--include-derived", "--include-subtraction", "--json",
    )
    # the expected subtraction counterexample is not a failure
    assert out.returncode == 0
    lines = [json.loads(l) for l in out.stdout.splitlines()]
    assert len(lines) == 13 + 6 + 1
    by_axiom = {l["axiom"]: l for l in lines}
    assert by_axiom["SUBTRACTION"]["verdict"] == "counterexample"
    assert by_axiom["SUBTRACTION"]["counterexample"] == {"x": ["1"], "y": ["0", "1"]}
    assert all(l["verdict"] == "pass" for l in lines if l["axiom"] != "SUBTRACTION")


def test_check_axioms_qext():
    out = run_cli("check-axioms", "--model", "qext", "--samples", "40", "--json")
    assert out.returncode == 0
    lines = [json.loads(l) for l in out.stdout.splitlines()]
    assert [l["axiom"] for l in lines] == ["Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "AUTOMORPHISM"]
    assert all(l["verdict"] == "pass" for l in lines)


def test_check_axioms_deterministic_output():
    args = ("check-axioms", "--model", "polynat", "--seed", "42",
            "--samples", "200", "--json")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


def test_demo_subtraction_exits_zero():
    out = run_cli("demo", "subtraction", "--samples", "50")
    assert out.returncode == 0
    assert b"z0 + 1 = 0" in out.stdout


def test_demo_q_pairing_exits_zero():
    out = run_cli("demo", "q-pairing", "--samples", "50")
    assert out.returncode == 0
    assert b"AUTOMORPHISM" in out.stdout
    assert b"prose, not machine-checked" in out.stdout


def test_demo_json_mode():
    out = run_cli("demo", "subtraction", "--samples", "30", "--json")
    assert out.returncode == 0
    obj = json.loads(out.stdout)
    assert obj["polynat_verdict"] == "counterexample"
    assert obj["nat_verdict"] == "pass"
    assert obj["order_holds"] is True
    assert obj["solvable"] is False


def test_unknown_subcommand_exits_2():
    assert run_cli("frobnicate").returncode == 2
