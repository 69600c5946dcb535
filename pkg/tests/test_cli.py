import pytest

from braidgeo.cli import main
from conftest import CHAIN_DIR


def test_eq_exit_codes(capsys):
    assert main(["eq", "--strands", "3", "1 2 1", "2 1 2"]) == 0
    assert main(["eq", "--strands", "3", "1", "2"]) == 1


def test_nf_prints_normal_form(capsys):
    assert main(["nf", "--strands", "2", "1 1 1"]) == 0
    assert capsys.readouterr().out.startswith("D^")


def test_usage_errors_exit_2(capsys):
    assert main([]) == 2
    assert main(["bogus"]) == 2
    assert main(["eq", "--strands", "3", "1 9", "1"]) == 2
    assert main(["verify", "/no/such/file.cert"]) == 2


def test_verify_bundled_certificates(capsys):
    certs = sorted(CHAIN_DIR.glob("lemma3_1_*.cert"))
    assert main(["verify"] + [str(c) for c in certs]) == 0
    out = capsys.readouterr().out
    assert out.count("pass") == len(certs) == 3


def test_verify_rejects_tampered_certificate(tmp_path, capsys):
    text = (CHAIN_DIR / "lemma3_2_3_1.cert").read_text()
    bad = tmp_path / "bad.cert"
    bad.write_text(text.replace("target = torus", "target = torus ")
                   .replace("1 1 1", "1 1 -1", 1))
    assert main(["verify", str(bad)]) == 1


def test_lt_output(capsys):
    assert main(["lt", "--strands", "2", "--order", "3", "1 1 1"]) == 0
    out = capsys.readouterr().out
    assert "sigma = -2" in out
    assert "sums over k = 1..2: sigma = -4, eta = 0" in out


def test_predict_exit_codes(capsys):
    assert main(["predict", "--strands", "2", "--order", "2", "1 1 1"]) == 0
    assert "chi = 3" in capsys.readouterr().out
    # 30 positive bands on 2 strands: X = 29 blows every gate
    assert main(["predict", "--strands", "2", "--order", "2",
                 "--theorem", "1", " ".join(["1"] * 30)]) == 1


def test_reproduce_matches_and_is_byte_stable(capsys):
    assert main(["reproduce", "--theorem", "1.5", "--output", "csv"]) == 0
    first = capsys.readouterr().out
    assert main(["reproduce", "--theorem", "1.5", "--output", "csv",
                 "--parallel"]) == 0
    assert capsys.readouterr().out == first
    assert first.count("\n") == 15  # header + 14 knots


def test_catalog_audit(capsys):
    assert main(["catalog", "audit"]) == 0
    assert "ok" in capsys.readouterr().out
