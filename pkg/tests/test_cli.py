"""Exit codes and output of the command line front end."""

import pytest

from minarith import (All, BOT, ClassId, Imp, NAT, NameSupply, ObjVar,
                      TheoryId, TRUTH, ZERO, all_intro, alpha_eq_formula,
                      assume, axiom, certify, fresh_assumption, imp_elim,
                      all_elim, imp_intros, parse_formula, parse_proof,
                      print_proof, Truth)
from minarith.cli import main

from conftest import load_manifest

MANIFEST = load_manifest()


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize(
    "entry", MANIFEST, ids=[f"{e['file']}:{e['theory']}" for e in MANIFEST])
def test_check_fixture(entry, tmp_path, capsys):
    src = tmp_path / "p.prf"
    src.write_text(entry["text"], encoding="utf-8")
    code, out, _ = run(capsys, "check", str(src), "--theory", entry["theory"])
    if entry["expect"] == "ok":
        assert code == 0
        last = out.strip().splitlines()[-1]
        head, _, concl = last.partition(" ⊢ ")
        assert head == entry["theory"]
        assert alpha_eq_formula(parse_formula(concl),
                                parse_formula(entry["conclusion"]))
    else:
        assert code == 1
        assert out.startswith(entry["expect"])


class TestCheck:
    def test_open_proof_lists_assumptions(self, tmp_path, capsys):
        src = tmp_path / "p.prf"
        src.write_text("(assume u 0 (atom (tt)))", encoding="utf-8")
        code, out, _ = run(capsys, "check", str(src), "--theory", "NA")
        assert code == 0
        assert out.splitlines()[0] == "(assume u 0 (atom (tt)))"

    def test_out_flag_writes_file(self, tmp_path, capsys):
        src = tmp_path / "p.prf"
        src.write_text("(axiom truth)", encoding="utf-8")
        dst = tmp_path / "result.txt"
        code, out, _ = run(capsys, "check", str(src), "--theory", "NA",
                           "--out", str(dst))
        assert code == 0 and out == ""
        assert dst.read_text(encoding="utf-8").endswith("(atom (tt))\n")

    def test_parse_error_exits_2(self, tmp_path, capsys):
        src = tmp_path / "p.prf"
        src.write_text("(axiom truth", encoding="utf-8")
        code, _, err = run(capsys, "check", str(src), "--theory", "NA")
        assert code == 2
        assert "parse-error" in err

    def test_missing_file_exits_2(self, tmp_path, capsys):
        code, _, err = run(capsys, "check", str(tmp_path / "no.prf"),
                           "--theory", "NA")
        assert code == 2
        assert "io-error" in err

    def test_theory_mismatch_exits_1(self, tmp_path, capsys):
        # an MA proof checked against HA: incomparable theories
        src = tmp_path / "p.prf"
        src.write_text("(axiom botplus)", encoding="utf-8")
        code, out, _ = run(capsys, "check", str(src), "--theory", "HA")
        assert code == 1
        assert out.startswith("theory-error")


class TestClassify:
    def test_report_lines(self, tmp_path, capsys):
        src = tmp_path / "f.fml"
        src.write_text("(bot)", encoding="utf-8")
        code, out, _ = run(capsys, "classify", str(src))
        assert code == 0
        flags = dict(line.split("=") for line in out.split())
        assert flags == {"Q": "no", "QF": "yes", "D": "yes", "G": "yes",
                         "R": "yes", "I": "no"}

    def test_language_violation_exits_1(self, tmp_path, capsys):
        src = tmp_path / "f.fml"
        src.write_text("(or (bot) (bot))", encoding="utf-8")
        code, out, _ = run(capsys, "classify", str(src))
        assert code == 1
        assert out.startswith("language-error")


def _write_premise(tmp_path):
    """A premise file for T -> (forall n (T -> bot)) -> bot."""
    sp = NameSupply()
    x = ObjVar("n", sp.draw(), NAT)
    u = fresh_assumption("u", TRUTH, sp)
    v = fresh_assumption("v", All(x, Imp(TRUTH, BOT)), sp)
    prem = imp_intros(imp_elim(all_elim(assume(v), ZERO, sp),
                               axiom(Truth(), TheoryId.MA)), u, v)
    src = tmp_path / "prem.prf"
    src.write_text(print_proof(prem), encoding="utf-8")
    return src, x


class TestTranslate:
    def test_classified_mode(self, tmp_path, capsys):
        src, x = _write_premise(tmp_path)
        code, out, _ = run(capsys, "translate", str(src))
        assert code == 0
        result = parse_proof(out.strip(), TheoryId.HA)
        want = parse_formula(
            "(imp (atom (tt)) (ex (var n 0 (nat)) (atom (tt))))")
        assert alpha_eq_formula(result.conclusion, want)

    def test_certified_mode(self, tmp_path, capsys):
        src, x = _write_premise(tmp_path)
        sp = NameSupply(1000)
        cert_d = tmp_path / "d.prf"
        cert_d.write_text(print_proof(certify(TRUTH, ClassId.DEFINITE, sp)),
                          encoding="utf-8")
        cert_g = tmp_path / "g.prf"
        cert_g.write_text(
            print_proof(all_intro(x, certify(TRUTH, ClassId.GOAL, sp))),
            encoding="utf-8")
        code, out, _ = run(capsys, "translate", str(src),
                           "--mode", "certified",
                           "--cert-d", str(cert_d), "--cert-g", str(cert_g))
        assert code == 0
        result = parse_proof(out.strip(), TheoryId.HA)
        want = parse_formula(
            "(imp (atom (tt)) (ex (var n 0 (nat)) (atom (tt))))")
        assert alpha_eq_formula(result.conclusion, want)

    def test_certified_without_certs_exits_1(self, tmp_path, capsys):
        src, _ = _write_premise(tmp_path)
        code, out, _ = run(capsys, "translate", str(src),
                           "--mode", "certified")
        assert code == 1
        assert out.startswith("certificate-error")

    def test_bad_shape_exits_1(self, tmp_path, capsys):
        src = tmp_path / "prem.prf"
        src.write_text("(axiom truth)", encoding="utf-8")
        code, out, _ = run(capsys, "translate", str(src))
        assert code == 1
        assert out.startswith("shape-error")


class TestGG:
    def test_na_formula_comes_with_proof(self, tmp_path, capsys):
        src = tmp_path / "f.fml"
        src.write_text("(atom (tt))", encoding="utf-8")
        code, out, _ = run(capsys, "gg", str(src))
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 2
        want = parse_formula(
            "(imp (imp (atom (tt)) (atom (ff))) (atom (ff)))")
        assert alpha_eq_formula(parse_formula(lines[0]), want)
        p = parse_proof(lines[1], TheoryId.NA)
        assert not p.free_assumptions

    def test_bot_formula_exits_1(self, tmp_path, capsys):
        src = tmp_path / "f.fml"
        src.write_text("(bot)", encoding="utf-8")
        code, out, _ = run(capsys, "gg", str(src))
        assert code == 1
        assert out.startswith("language-error")


class TestEfq:
    def test_atom_in_na(self, tmp_path, capsys):
        src = tmp_path / "f.fml"
        src.write_text("(atom (ff))", encoding="utf-8")
        code, out, _ = run(capsys, "efq", str(src), "--theory", "NA")
        assert code == 0
        p = parse_proof(out.strip(), TheoryId.NA)
        assert not p.free_assumptions

    def test_language_mismatch_exits_1(self, tmp_path, capsys):
        src = tmp_path / "f.fml"
        src.write_text("(bot)", encoding="utf-8")
        code, out, _ = run(capsys, "efq", str(src), "--theory", "NA")
        assert code == 1
        assert out.startswith("language-error")


class TestSearch:
    def test_derivable_prints_witness(self, tmp_path, capsys):
        src = tmp_path / "f.fml"
        src.write_text("(imp (atom (ff)) (atom (ff)))", encoding="utf-8")
        code, out, _ = run(capsys, "search", str(src), "--theory", "NA",
                           "--depth", "4")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "derivable"
        p = parse_proof(lines[1], TheoryId.NA)
        assert alpha_eq_formula(
            p.conclusion,
            parse_formula("(imp (atom (ff)) (atom (ff)))"))

    def test_unknown_reports_depth(self, tmp_path, capsys):
        src = tmp_path / "f.fml"
        src.write_text("(atom (ff))", encoding="utf-8")
        code, out, _ = run(capsys, "search", str(src), "--theory", "NA",
                           "--depth", "5")
        assert code == 0
        assert out.strip() == "unknown 5"
