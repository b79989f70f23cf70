"""Round-trips and error reporting for the S-expression layer."""

import pytest

from minarith import (Arrow, BOOL, Const, GenConfig, Imp, NAT, NameSupply,
                      ObjVar, TheoryId, TRUTH, alpha_eq_formula, gen_formula,
                      gen_proof, parse_formula, parse_proof, parse_term,
                      parse_type, print_formula, print_proof, print_term,
                      print_type, read_sexpr, recheck)
from minarith.errors import ParseError
from minarith.syntax import App, Lam, ListType, Prod, TypeVar, Var


class TestReader:
    def test_nested_lists(self):
        assert read_sexpr("(a (b c) d)") == ["a", ["b", "c"], "d"]

    def test_comments_skipped(self):
        assert read_sexpr("(bool) ; trailing words\n") == ["bool"]

    def test_empty_input(self):
        with pytest.raises(ParseError):
            read_sexpr("   ; nothing here\n")

    def test_unbalanced(self):
        with pytest.raises(ParseError):
            read_sexpr("(imp (bot)")

    def test_trailing_form(self):
        with pytest.raises(ParseError):
            read_sexpr("(bot) (bot)")

    def test_stray_close(self):
        with pytest.raises(ParseError):
            read_sexpr(")")


class TestTypeRoundTrip:
    @pytest.mark.parametrize("ty", [
        BOOL, NAT, TypeVar("a"), ListType(NAT),
        Arrow(NAT, BOOL), Prod(Arrow(BOOL, BOOL), ListType(TypeVar("b"))),
    ])
    def test_round_trip(self, ty):
        assert parse_type(print_type(ty)) == ty

    def test_bad_type(self):
        with pytest.raises(ParseError):
            parse_type("(float)")


class TestTermRoundTrip:
    def test_constants_and_apps(self):
        x = ObjVar("x", 3, NAT)
        t = App(Lam(x, Var(x)), Const("zero"))
        assert parse_term(print_term(t)) == t

    def test_parameterized_constant(self):
        t = Const("nil", (NAT,))
        assert parse_term(print_term(t)) == t

    def test_ill_typed_app_is_parse_error(self):
        with pytest.raises(ParseError):
            parse_term("(app (tt) (ff))")

    def test_unknown_constant(self):
        with pytest.raises(ParseError):
            parse_term("(frob)")

    def test_wrong_param_count(self):
        with pytest.raises(ParseError):
            parse_term("(nil)")


class TestFormulaRoundTrip:
    def test_random_formulas(self):
        for seed in range(150):
            for lang in (TheoryId.NA, TheoryId.MA, TheoryId.HA):
                a = gen_formula(GenConfig(seed=seed, max_size=10,
                                          language=lang))
                assert parse_formula(print_formula(a)) == a

    def test_non_boolean_atom(self):
        with pytest.raises(ParseError):
            parse_formula("(atom (zero))")

    def test_bad_head(self):
        with pytest.raises(ParseError):
            parse_formula("(iff (bot) (bot))")


class TestProofRoundTrip:
    def test_random_proofs(self):
        for seed in range(120):
            m = gen_proof(seed, 12, NameSupply(10_000))
            n = parse_proof(print_proof(m), m.min_theory, NameSupply(50_000))
            assert alpha_eq_formula(n.conclusion, m.conclusion)
            assert n.min_theory == m.min_theory
            assert {(u.name, u.index) for u in n.free_assumptions} == \
                {(u.name, u.index) for u in m.free_assumptions}
            recheck(n)

    def test_parse_checks_through_kernel(self):
        # an ill-shaped application must surface as a kernel error,
        # not slip through as data
        from minarith.errors import ShapeError
        text = "(app-pf (axiom truth) (axiom truth))"
        with pytest.raises(ShapeError):
            parse_proof(text, TheoryId.NA)

    def test_bad_proof_form(self):
        with pytest.raises(ParseError):
            parse_proof("(qed)", TheoryId.NA)

    def test_identity_round_trip(self):
        text = "(lam-pf (assume u 0 (atom (tt))) (assume u 0 (atom (tt))))"
        p = parse_proof(text, TheoryId.NA)
        assert alpha_eq_formula(p.conclusion, Imp(TRUTH, TRUTH))
        q = parse_proof(print_proof(p), TheoryId.NA)
        assert alpha_eq_formula(q.conclusion, p.conclusion)
