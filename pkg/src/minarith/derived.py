"""Proof-synthesizing derived lemmas.

Each synthesizer emits kernel constructions directly, one code path per case
of the underlying induction: ex-falso-quodlibet, bottom substitution inside
proofs, the negative-translation equivalence, and case distinction for the
quantifier-free-style class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClassError, LanguageError
from .formula import (FALSITY, All, And, Atom, Bot, Ex, Formula, Imp, Or,
                      TheoryId, formula_free_vars, imp, in_language,
                      min_language, neg, subst_bot, subst_formula_var,
                      theory_leq)
from .kernel import (AssumptionVar, BoolCases, BotPlus, ExElim, ExIntro,
                     IndList, IndNat, Lem, OrElim, OrIntroL, OrIntroR, Proof,
                     Truth, all_elim, all_intro, and_intro, assume, axiom,
                     fresh_assumption, imp_elim, imp_elims, imp_intro,
                     imp_intros, proj)
from .syntax import (BOOL, Const, NameSupply, ObjVar, Term, Var,
                     free_term_vars, subst_term)


@dataclass(frozen=True)
class SynthesisResult:
    proof: Proof
    target: Formula


def _fresh_bool_var(supply: NameSupply, avoid) -> ObjVar:
    v = ObjVar("b", supply.draw(), BOOL)
    while v in avoid:
        v = ObjVar("b", supply.draw(), BOOL)
    return v


# ---------------------------------------------------------------------------
# Ex falso quodlibet


def prove_efq(a: Formula, th: TheoryId,
              supply: NameSupply | None = None) -> Proof:
    """Closed proof of F -> A in the given theory."""
    if not in_language(a, th):
        raise LanguageError(f"formula is not in the language of {th.value}")
    if supply is None:
        supply = NameSupply()
    return _efq(a, th, supply)


def _efq(a: Formula, th: TheoryId, supply: NameSupply) -> Proof:
    match a:
        case Bot():
            return axiom(BotPlus(), th)
        case Atom(t):
            b = _fresh_bool_var(supply, free_term_vars(t))
            cases = axiom(BoolCases(b, Atom(Var(b))), th, supply)
            inst = all_elim(cases, t, supply)  # T -> F -> atom t
            return imp_elim(inst, axiom(Truth(), th))
        case Imp(p, c):
            u = fresh_assumption("u", FALSITY, supply)
            v = fresh_assumption("v", p, supply)
            return imp_intro(u, imp_intro(v, imp_elim(_efq(c, th, supply),
                                                      assume(u))))
        case And(l, r):
            u = fresh_assumption("u", FALSITY, supply)
            return imp_intro(u, and_intro(
                imp_elim(_efq(l, th, supply), assume(u)),
                imp_elim(_efq(r, th, supply), assume(u))))
        case All(x, b):
            u = fresh_assumption("u", FALSITY, supply)
            return imp_intro(u, all_intro(x, imp_elim(_efq(b, th, supply),
                                                      assume(u))))
        case Or(l, r):
            u = fresh_assumption("u", FALSITY, supply)
            return imp_intro(u, imp_elim(axiom(OrIntroL(l, r), th, supply),
                                         imp_elim(_efq(l, th, supply),
                                                  assume(u))))
        case Ex(x, b):
            u = fresh_assumption("u", FALSITY, supply)
            intro = axiom(ExIntro(b, x, Var(x)), th, supply)  # B -> exists x B
            return imp_intro(u, imp_elim(intro, imp_elim(_efq(b, th, supply),
                                                         assume(u))))
    raise ValueError(f"unexpected formula {a!r}")


# ---------------------------------------------------------------------------
# Variable substitution through proofs


def subst_objvar_proof(m: Proof, x: ObjVar, t: Term,
                       supply: NameSupply | None = None) -> Proof:
    """Substitute the object variable ``x`` by ``t`` throughout a proof.

    Assumption variables keep their identity; their formulas are rewritten
    uniformly.  Binders over ``x`` shield their subtrees, binders over free
    variables of ``t`` are alpha-renamed first.
    """
    if t.ty != x.ty:
        raise TypeError(f"cannot substitute term of type {t.ty} for {x}")
    if supply is None:
        supply = NameSupply()
    fv_t = free_term_vars(t)

    def sub_f(f: Formula) -> Formula:
        return subst_formula_var(f, x, t, supply)

    def fresh_like(v: ObjVar, extra=frozenset()) -> ObjVar:
        avoid = fv_t | {x} | extra
        candidate = supply.fresh(v)
        while candidate in avoid:
            candidate = supply.fresh(v)
        return candidate

    def go(m: Proof) -> Proof:
        match m.rule:
            case "assume":
                u = m.params[0]
                return assume(AssumptionVar(u.name, u.index, sub_f(u.formula)))
            case "axiom":
                return _subst_axiom(m)
            case "and_intro":
                return and_intro(go(m.children[0]), go(m.children[1]))
            case "proj":
                return proj(m.params[0], go(m.children[0]))
            case "imp_elim":
                return imp_elim(go(m.children[0]), go(m.children[1]))
            case "imp_intro":
                u = m.params[0]
                u2 = AssumptionVar(u.name, u.index, sub_f(u.formula))
                return imp_intro(u2, go(m.children[0]))
            case "all_elim":
                return all_elim(go(m.children[0]),
                                subst_term(m.params[0], x, t, supply), supply)
            case "all_intro":
                y = m.params[0]
                if y == x:
                    return m
                child = m.children[0]
                if y in fv_t:
                    extra = formula_free_vars(m.conclusion)
                    for u in child.free_assumptions:
                        extra |= formula_free_vars(u.formula)
                    renamed = fresh_like(y, extra)
                    child = subst_objvar_proof(child, y, Var(renamed), supply)
                    return all_intro(renamed, go(child))
                return all_intro(y, go(child))
        raise ValueError(f"unexpected rule {m.rule!r}")

    def _subst_axiom(m: Proof) -> Proof:
        ax = m.params[0]
        th = m.min_theory
        match ax:
            case Truth() | BotPlus():
                return m
            case BoolCases(b, body) | IndNat(b, body):
                cls = type(ax)
                if b == x:
                    return m
                if b in fv_t:
                    renamed = fresh_like(b, formula_free_vars(body))
                    body = subst_formula_var(body, b, Var(renamed), supply)
                    b = renamed
                return axiom(cls(b, sub_f(body)), th, supply)
            case IndList(l, e, body):
                if e == x or e in fv_t:
                    # The cons-head variable occurs both bound and free in the
                    # scheme; it cannot be renamed or substituted coherently.
                    raise LanguageError(
                        "cannot substitute through a list induction axiom "
                        "whose element variable collides with the substitution")
                if l == x:
                    return m
                if l in fv_t:
                    renamed = fresh_like(l, formula_free_vars(body) | {e})
                    body = subst_formula_var(body, l, Var(renamed), supply)
                    l = renamed
                return axiom(IndList(l, e, sub_f(body)), th, supply)
            case OrIntroL(a, b):
                return axiom(OrIntroL(sub_f(a), sub_f(b)), th, supply)
            case OrIntroR(a, b):
                return axiom(OrIntroR(sub_f(a), sub_f(b)), th, supply)
            case OrElim(a, b, c):
                return axiom(OrElim(sub_f(a), sub_f(b), sub_f(c)), th, supply)
            case Lem(a):
                return axiom(Lem(sub_f(a)), th, supply)
            case ExIntro(a, v, w):
                if v == x:
                    return axiom(ExIntro(a, v, subst_term(w, x, t, supply)),
                                 th, supply)
                if v in fv_t:
                    renamed = fresh_like(v, formula_free_vars(a))
                    a = subst_formula_var(a, v, Var(renamed), supply)
                    v = renamed
                return axiom(ExIntro(sub_f(a), v,
                                     subst_term(w, x, t, supply)), th, supply)
            case ExElim(a, v, c):
                if v == x:
                    return m
                if v in fv_t:
                    renamed = fresh_like(v, formula_free_vars(a))
                    a = subst_formula_var(a, v, Var(renamed), supply)
                    v = renamed
                return axiom(ExElim(sub_f(a), v, sub_f(c)), th, supply)
        raise ValueError(f"unexpected axiom {ax!r}")

    return go(m)


# ---------------------------------------------------------------------------
# Bottom substitution through proofs


def subst_bot_proof(m: Proof, s: Formula,
                    supply: NameSupply | None = None) -> Proof:
    """Rewrite an MA proof of A into a proof of A^S.

    Free assumptions (u_i : A_i) turn into fresh assumptions (u~_i : A_i^S);
    the bottom-introduction axiom becomes an ex-falso proof of F -> S.
    """
    if not theory_leq(m.min_theory, TheoryId.MA):
        raise LanguageError("bottom substitution applies to NA/MA proofs only")
    if supply is None:
        supply = NameSupply()
    s_lang = min_language(s)  # rejects mixed-language substituents
    th_out = s_lang if s_lang != TheoryId.PA else TheoryId.HA
    fv_s = formula_free_vars(s)
    amap: dict[AssumptionVar, AssumptionVar] = {}

    def sub(f: Formula) -> Formula:
        return subst_bot(f, s, supply)

    def mapped(u: AssumptionVar) -> AssumptionVar:
        if u not in amap:
            amap[u] = fresh_assumption(u.name, sub(u.formula), supply)
        return amap[u]

    def go(m: Proof) -> Proof:
        match m.rule:
            case "assume":
                return assume(mapped(m.params[0]))
            case "axiom":
                return _subst_axiom(m)
            case "and_intro":
                return and_intro(go(m.children[0]), go(m.children[1]))
            case "proj":
                return proj(m.params[0], go(m.children[0]))
            case "imp_elim":
                return imp_elim(go(m.children[0]), go(m.children[1]))
            case "imp_intro":
                u = m.params[0]
                shadowed = amap.pop(u, None)
                child = go(m.children[0])
                u2 = amap.pop(u, None) or fresh_assumption(
                    u.name, sub(u.formula), supply)
                if shadowed is not None:
                    amap[u] = shadowed
                return imp_intro(u2, child)
            case "all_elim":
                return all_elim(go(m.children[0]), m.params[0], supply)
            case "all_intro":
                y = m.params[0]
                child = m.children[0]
                if y in fv_s:
                    avoid = fv_s | formula_free_vars(m.conclusion)
                    for u in child.free_assumptions:
                        avoid |= formula_free_vars(u.formula)
                    renamed = supply.fresh_avoiding(y, avoid)
                    child = subst_objvar_proof(child, y, Var(renamed), supply)
                    return all_intro(renamed, go(child))
                return all_intro(y, go(child))
        raise ValueError(f"unexpected rule {m.rule!r}")

    def _subst_axiom(m: Proof) -> Proof:
        ax = m.params[0]
        match ax:
            case BotPlus():
                return prove_efq(s, th_out, supply)
            case Truth():
                return axiom(Truth(), th_out)
            case BoolCases(b, body) | IndNat(b, body):
                cls = type(ax)
                if b in fv_s:
                    avoid = fv_s | formula_free_vars(body)
                    renamed = supply.fresh_avoiding(b, avoid)
                    body = subst_formula_var(body, b, Var(renamed), supply)
                    b = renamed
                return axiom(cls(b, sub(body)), th_out, supply)
            case IndList(l, e, body):
                if e in fv_s:
                    raise LanguageError(
                        "cannot substitute bottom through a list induction "
                        "axiom whose element variable is free in the substituent")
                if l in fv_s:
                    avoid = fv_s | formula_free_vars(body) | {e}
                    renamed = supply.fresh_avoiding(l, avoid)
                    body = subst_formula_var(body, l, Var(renamed), supply)
                    l = renamed
                return axiom(IndList(l, e, sub(body)), th_out, supply)
        raise LanguageError(
            f"axiom {type(ax).__name__} cannot occur in an NA/MA proof")

    return go(m)


# ---------------------------------------------------------------------------
# Negative-translation equivalence over NA


def prove_gg_equiv(a: Formula, supply: NameSupply | None = None) -> Proof:
    """Closed NA proof of (A -> A~~) and (A~~ -> A), as a conjunction."""
    if not in_language(a, TheoryId.NA):
        raise LanguageError("the equivalence lemma is stated for NA formulas")
    if supply is None:
        supply = NameSupply()
    return _gg_equiv(a, supply)


def _gg_equiv(a: Formula, supply: NameSupply) -> Proof:
    na = TheoryId.NA
    match a:
        case Atom(t):
            if t == Const("ff"):
                u = fresh_assumption("u", a, supply)
                ident = imp_intro(u, assume(u))
                return and_intro(ident, ident)
            # direction A -> ~~A
            u = fresh_assumption("u", a, supply)
            v = fresh_assumption("v", neg(a), supply)
            fwd = imp_intro(u, imp_intro(v, imp_elim(assume(v), assume(u))))
            # direction ~~A -> A via case distinction on the payload
            b = _fresh_bool_var(supply, free_term_vars(t))
            atom_b = Atom(Var(b))
            body = Imp(neg(neg(atom_b)), atom_b)
            inst = all_elim(axiom(BoolCases(b, body), na, supply), t, supply)
            w = fresh_assumption("w", neg(neg(Atom(Const("tt")))), supply)
            case_tt = imp_intro(w, axiom(Truth(), na))
            v2 = fresh_assumption("v", neg(neg(FALSITY)), supply)
            u2 = fresh_assumption("u", FALSITY, supply)
            case_ff = imp_intro(v2, imp_elim(assume(v2),
                                             imp_intro(u2, assume(u2))))
            bwd = imp_elims(inst, case_tt, case_ff)
            return and_intro(fwd, bwd)
        case Imp(p, c):
            e_p = _gg_equiv(p, supply)
            e_c = _gg_equiv(c, supply)
            pn = _gg_of(e_p)
            u = fresh_assumption("u", a, supply)
            v = fresh_assumption("v", pn, supply)
            fwd = imp_intro(u, imp_intro(v, imp_elim(
                proj(0, e_c),
                imp_elim(assume(u), imp_elim(proj(1, e_p), assume(v))))))
            u2 = fresh_assumption("u", Imp(pn, _gg_of(e_c)), supply)
            v2 = fresh_assumption("v", p, supply)
            bwd = imp_intro(u2, imp_intro(v2, imp_elim(
                proj(1, e_c),
                imp_elim(assume(u2), imp_elim(proj(0, e_p), assume(v2))))))
            return and_intro(fwd, bwd)
        case And(l, r):
            e_l = _gg_equiv(l, supply)
            e_r = _gg_equiv(r, supply)
            u = fresh_assumption("u", a, supply)
            fwd = imp_intro(u, and_intro(
                imp_elim(proj(0, e_l), proj(0, assume(u))),
                imp_elim(proj(0, e_r), proj(1, assume(u)))))
            u2 = fresh_assumption("u", And(_gg_of(e_l), _gg_of(e_r)), supply)
            bwd = imp_intro(u2, and_intro(
                imp_elim(proj(1, e_l), proj(0, assume(u2))),
                imp_elim(proj(1, e_r), proj(1, assume(u2)))))
            return and_intro(fwd, bwd)
        case All(x, b):
            e_b = _gg_equiv(b, supply)
            u = fresh_assumption("u", a, supply)
            fwd = imp_intro(u, all_intro(x, imp_elim(
                proj(0, e_b), all_elim(assume(u), Var(x), supply))))
            u2 = fresh_assumption("u", All(x, _gg_of(e_b)), supply)
            bwd = imp_intro(u2, all_intro(x, imp_elim(
                proj(1, e_b), all_elim(assume(u2), Var(x), supply))))
            return and_intro(fwd, bwd)
    raise ValueError(f"unexpected formula {a!r}")


def _gg_of(equiv: Proof) -> Formula:
    # equiv concludes (A -> A~~) /\ (A~~ -> A); read off A~~.
    return equiv.conclusion.left.concl


# ---------------------------------------------------------------------------
# Case distinction for the class Q


def prove_case_distinction(a: Formula, s: Formula, th: TheoryId,
                           supply: NameSupply | None = None) -> Proof:
    """Closed proof of (A -> S) -> (not A -> S) -> S for A in class Q."""
    from .classes import in_Q  # local import; classes builds on this module

    if th == TheoryId.PA:
        raise LanguageError("case distinction is synthesized for NA/MA/HA")
    if not in_Q(a):
        raise ClassError("formula does not admit synthesized case distinction")
    if not in_language(s, th):
        raise LanguageError(f"target formula is not in the language of {th.value}")
    if supply is None:
        supply = NameSupply()
    return _cd(a, s, th, supply)


def _cd(a: Formula, s: Formula, th: TheoryId, supply: NameSupply) -> Proof:
    match a:
        case Atom(t):
            avoid = free_term_vars(t) | {v for f in (s,)
                                         for v in formula_free_vars(f)}
            b = _fresh_bool_var(supply, avoid)
            atom_b = Atom(Var(b))
            body = imp(Imp(atom_b, s), Imp(neg(atom_b), s), s)
            inst = all_elim(axiom(BoolCases(b, body), th, supply), t, supply)
            # (T -> S) -> (not T -> S) -> S
            u1 = fresh_assumption("u", Imp(Atom(Const("tt")), s), supply)
            u2 = fresh_assumption("v", Imp(neg(Atom(Const("tt"))), s), supply)
            case_tt = imp_intros(
                imp_elim(assume(u1), axiom(Truth(), th)), u1, u2)
            # (F -> S) -> (not F -> S) -> S
            w1 = fresh_assumption("u", Imp(FALSITY, s), supply)
            w2 = fresh_assumption("v", Imp(neg(FALSITY), s), supply)
            wf = fresh_assumption("w", FALSITY, supply)
            case_ff = imp_intros(
                imp_elim(assume(w2), imp_intro(wf, assume(wf))), w1, w2)
            return imp_elims(inst, case_tt, case_ff)
        case Imp(b, c):
            ih_b = _cd(b, imp(neg(c), s), th, supply)
            ih_c = _cd(c, s, th, supply)
            u1 = fresh_assumption("u", Imp(a, s), supply)
            u2 = fresh_assumption("v", Imp(neg(a), s), supply)
            # C -> S: from C the implication B -> C is immediate
            cc = fresh_assumption("c", c, supply)
            bb = fresh_assumption("b", b, supply)
            c_to_s = imp_intro(cc, imp_elim(
                assume(u1), imp_intro(bb, assume(cc))))
            # B -> not C -> S: refute B -> C against the second premise
            b2 = fresh_assumption("b", b, supply)
            nc = fresh_assumption("nc", neg(c), supply)
            v = fresh_assumption("f", a, supply)
            b_nc_s = imp_intro(b2, imp_intro(nc, imp_elim(
                assume(u2),
                imp_intro(v, imp_elim(assume(nc),
                                      imp_elim(assume(v), assume(b2)))))))
            # not B -> not C -> S: B -> C holds ex falso
            nb = fresh_assumption("nb", neg(b), supply)
            nc2 = fresh_assumption("nc", neg(c), supply)
            b3 = fresh_assumption("b", b, supply)
            nb_nc_s = imp_intro(nb, imp_intro(nc2, imp_elim(
                assume(u1),
                imp_intro(b3, imp_elim(prove_efq(c, th, supply),
                                       imp_elim(assume(nb), assume(b3)))))))
            nc_to_s = imp_elims(ih_b, b_nc_s, nb_nc_s)
            return imp_intros(imp_elims(ih_c, c_to_s, nc_to_s), u1, u2)
        case And(b, c):
            ih_b = _cd(b, imp(c, s), th, supply)
            ih_c = _cd(c, s, th, supply)
            u1 = fresh_assumption("u", Imp(a, s), supply)
            u2 = fresh_assumption("v", Imp(neg(a), s), supply)
            # not C -> S
            nc = fresh_assumption("nc", neg(c), supply)
            p1 = fresh_assumption("p", a, supply)
            nc_to_s = imp_intro(nc, imp_elim(
                assume(u2),
                imp_intro(p1, imp_elim(assume(nc), proj(1, assume(p1))))))
            # B -> C -> S
            b1 = fresh_assumption("b", b, supply)
            c1 = fresh_assumption("c", c, supply)
            b_c_s = imp_intro(b1, imp_intro(c1, imp_elim(
                assume(u1), and_intro(assume(b1), assume(c1)))))
            # not B -> C -> S
            nb = fresh_assumption("nb", neg(b), supply)
            c2 = fresh_assumption("c", c, supply)
            p2 = fresh_assumption("p", a, supply)
            nb_c_s = imp_intro(nb, imp_intro(c2, imp_elim(
                assume(u2),
                imp_intro(p2, imp_elim(assume(nb), proj(0, assume(p2)))))))
            c_to_s = imp_elims(ih_b, b_c_s, nb_c_s)
            return imp_intros(imp_elims(ih_c, c_to_s, nc_to_s), u1, u2)
        case All(x, b):
            b_tt = subst_formula_var(b, x, Const("tt"), supply)
            b_ff = subst_formula_var(b, x, Const("ff"), supply)
            conj = And(b_tt, b_ff)
            # forall x B  ->  B(tt) /\ B(ff)
            u = fresh_assumption("u", a, supply)
            e1 = imp_intro(u, and_intro(
                all_elim(assume(u), Const("tt"), supply),
                all_elim(assume(u), Const("ff"), supply)))
            # B(tt) /\ B(ff)  ->  forall x B
            w = fresh_assumption("w", conj, supply)
            cases = axiom(BoolCases(x, b), th, supply)
            e2 = imp_intro(w, all_intro(x, imp_elims(
                all_elim(cases, Var(x), supply),
                proj(0, assume(w)), proj(1, assume(w)))))
            cd_conj = _cd(conj, s, th, supply)
            u1 = fresh_assumption("u", Imp(a, s), supply)
            u2 = fresh_assumption("v", Imp(neg(a), s), supply)
            p = fresh_assumption("p", conj, supply)
            arg1 = imp_intro(p, imp_elim(assume(u1),
                                         imp_elim(e2, assume(p))))
            np = fresh_assumption("np", neg(conj), supply)
            v = fresh_assumption("f", a, supply)
            arg2 = imp_intro(np, imp_elim(
                assume(u2),
                imp_intro(v, imp_elim(assume(np), imp_elim(e1, assume(v))))))
            return imp_intros(imp_elims(cd_conj, arg1, arg2), u1, u2)
    raise ClassError(f"formula {a!r} is outside the case-distinction class")
