"""Synthesized lemmas: ex-falso, bottom substitution, negative-translation
equivalence, and case distinction."""

import pytest

from minarith import (BOT, FALSITY, TRUTH, All, And, Atom, BotPlus, Const,
                      GenConfig, Imp, NameSupply, ObjVar, TheoryId, TT, Var,
                      alpha_eq_formula, assume, axiom, fresh_assumption,
                      gen_formula, gen_proof, gg_translate, imp, imp_intro,
                      in_Q, min_language, neg, prove_case_distinction,
                      prove_efq, prove_gg_equiv, recheck, subst_bot,
                      subst_bot_proof, subst_objvar_proof, theory_leq)
from minarith.errors import ClassError, LanguageError
from minarith.syntax import BOOL, NAT


class TestExFalso:
    def test_bot_case_is_botplus(self):
        p = prove_efq(BOT, TheoryId.MA)
        assert p.rule == "axiom"
        assert p.params[0] == BotPlus()

    def test_atom_case_uses_boolcases(self):
        p = prove_efq(Atom(TT), TheoryId.NA)
        assert alpha_eq_formula(p.conclusion, Imp(FALSITY, TRUTH))
        tags = set()

        def walk(m):
            if m.rule == "axiom":
                tags.add(type(m.params[0]).__name__)
            for c in m.children:
                walk(c)

        walk(p)
        assert {"BoolCases", "Truth"} <= tags

    def test_conjunction_case(self):
        a = And(TRUTH, FALSITY)
        p = prove_efq(a, TheoryId.NA)
        assert alpha_eq_formula(p.conclusion, Imp(FALSITY, a))
        recheck(p)

    def test_language_guard(self):
        with pytest.raises(LanguageError):
            prove_efq(BOT, TheoryId.NA)

    @pytest.mark.parametrize("th", list(TheoryId))
    def test_random_formulas(self, th):
        lang = th if th != TheoryId.PA else TheoryId.HA
        for seed in range(100):
            a = gen_formula(GenConfig(seed=seed, max_size=10, language=lang))
            p = prove_efq(a, th, NameSupply(10_000))
            assert not p.free_assumptions
            assert alpha_eq_formula(p.conclusion, Imp(FALSITY, a))
            assert theory_leq(p.min_theory, th)
            recheck(p)


class TestSubstObjvarProof:
    def test_instantiates_conclusion(self):
        sp = NameSupply()
        x = ObjVar("x", sp.draw(), BOOL)
        u = fresh_assumption("u", Atom(Var(x)), sp)
        p = imp_intro(u, assume(u))
        q = subst_objvar_proof(p, x, TT, sp)
        assert q.conclusion == Imp(Atom(TT), Atom(TT))
        recheck(q)


class TestSubstBotProof:
    def test_botplus_becomes_efq(self):
        sp = NameSupply()
        p = subst_bot_proof(axiom(BotPlus(), TheoryId.MA), TRUTH, sp)
        assert alpha_eq_formula(p.conclusion, Imp(FALSITY, TRUTH))
        assert theory_leq(p.min_theory, TheoryId.NA)

    def test_assumption_renamed(self):
        sp = NameSupply()
        u = fresh_assumption("u", BOT, sp)
        q = subst_bot_proof(assume(u), TRUTH, sp)
        assert q.conclusion == TRUTH
        (v,) = q.free_assumptions
        assert v.name == u.name
        assert v.formula == TRUTH

    def test_rejects_ha_proofs(self):
        from minarith import OrIntroL
        p = axiom(OrIntroL(TRUTH, TRUTH), TheoryId.HA)
        with pytest.raises(LanguageError):
            subst_bot_proof(p, TRUTH)

    def test_conclusion_commutes_on_random_proofs(self):
        for seed in range(150):
            m = gen_proof(seed, 10, NameSupply(10_000))
            for s in (TRUTH, FALSITY, Imp(TRUTH, BOT)):
                n = subst_bot_proof(m, s, NameSupply(60_000))
                assert alpha_eq_formula(n.conclusion,
                                        subst_bot(m.conclusion, s))
                recheck(n)
                # the free assumptions are the substituted originals
                from minarith.formula import canonical_formula
                key = lambda pair: (pair[0], repr(pair[1]))
                want = sorted(((u.name, canonical_formula(
                    subst_bot(u.formula, s))) for u in m.free_assumptions),
                    key=key)
                got = sorted(((u.name, canonical_formula(u.formula))
                              for u in n.free_assumptions), key=key)
                assert want == got

    def test_truth_substitution_lands_in_na(self):
        for seed in range(100):
            m = gen_proof(seed, 10, NameSupply(10_000))
            n = subst_bot_proof(m, TRUTH, NameSupply(60_000))
            assert theory_leq(n.min_theory, TheoryId.NA)


class TestGGEquiv:
    def test_falsity_case(self):
        p = prove_gg_equiv(FALSITY)
        want = And(Imp(FALSITY, FALSITY), Imp(FALSITY, FALSITY))
        assert alpha_eq_formula(p.conclusion, want)

    def test_atom_case(self):
        p = prove_gg_equiv(Atom(TT))
        want = And(Imp(TRUTH, neg(neg(TRUTH))), Imp(neg(neg(TRUTH)), TRUTH))
        assert alpha_eq_formula(p.conclusion, want)
        recheck(p)

    def test_quantified_atom(self):
        x = ObjVar("x", 0, NAT)
        a = All(x, Atom(TT))
        p = prove_gg_equiv(a)
        want = And(Imp(a, gg_translate(a)), Imp(gg_translate(a), a))
        assert alpha_eq_formula(p.conclusion, want)
        recheck(p)

    def test_language_guard(self):
        with pytest.raises(LanguageError):
            prove_gg_equiv(BOT)

    def test_random_na_formulas(self):
        for seed in range(100):
            a = gen_formula(GenConfig(seed=seed, max_size=10,
                                      language=TheoryId.NA))
            p = prove_gg_equiv(a, NameSupply(10_000))
            assert not p.free_assumptions
            assert p.min_theory == TheoryId.NA
            want = And(Imp(a, gg_translate(a)), Imp(gg_translate(a), a))
            assert alpha_eq_formula(p.conclusion, want)
            recheck(p)


class TestCaseDistinction:
    def test_atom_with_falsity(self):
        p = prove_case_distinction(Atom(TT), FALSITY, TheoryId.NA)
        want = imp(Imp(TRUTH, FALSITY), Imp(neg(TRUTH), FALSITY), FALSITY)
        assert alpha_eq_formula(p.conclusion, want)
        recheck(p)

    def test_implication_case(self):
        a = Imp(Atom(TT), Atom(Const("ff")))
        p = prove_case_distinction(a, BOT, TheoryId.MA)
        want = imp(Imp(a, BOT), Imp(neg(a), BOT), BOT)
        assert alpha_eq_formula(p.conclusion, want)
        recheck(p)

    def test_forall_bool_case(self):
        x = ObjVar("x", 0, BOOL)
        a = All(x, Atom(Var(x)))
        p = prove_case_distinction(a, FALSITY, TheoryId.NA, NameSupply(100))
        want = imp(Imp(a, FALSITY), Imp(neg(a), FALSITY), FALSITY)
        assert alpha_eq_formula(p.conclusion, want)
        recheck(p)

    def test_bot_rejected(self):
        with pytest.raises(ClassError):
            prove_case_distinction(BOT, FALSITY, TheoryId.MA)

    def test_pa_rejected(self):
        with pytest.raises(LanguageError):
            prove_case_distinction(Atom(TT), FALSITY, TheoryId.PA)

    def test_random_q_formulas(self):
        found = 0
        seed = 0
        while found < 50 and seed < 3000:
            a = gen_formula(GenConfig(seed=seed, max_size=8,
                                      language=TheoryId.NA))
            seed += 1
            if not in_Q(a):
                continue
            found += 1
            for s in (FALSITY, BOT):
                th = TheoryId.MA if min_language(s) == TheoryId.MA \
                    else TheoryId.NA
                p = prove_case_distinction(a, s, th, NameSupply(100_000))
                assert not p.free_assumptions
                want = imp(Imp(a, s), Imp(neg(a), s), s)
                assert alpha_eq_formula(p.conclusion, want)
                recheck(p)
        assert found == 50
