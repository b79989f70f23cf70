"""LCF-style natural deduction kernel for the four arithmetics.

``Proof`` values can only be created through the checked constructors in this
module; every value therefore satisfies its rule's side conditions and caches
its conclusion, free assumptions, and minimal theory.  Downstream code never
re-verifies proofs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EigenvariableError, ShapeError, TheoryError
from .formula import (BOT, FALSITY, TRUTH, All, And, Ex, Formula, Imp,
                      Or, TheoryId, alpha_eq_formula, formula_free_vars, imp,
                      min_language, neg, subst_formula_var, theory_join,
                      theory_leq)
from .syntax import (BOOL, NAT, Const, ListType, NameSupply, ObjVar, Term,
                     Var, app)


@dataclass(frozen=True)
class AssumptionVar:
    name: str
    index: int
    formula: Formula


def fresh_assumption(name: str, formula: Formula,
                     supply: NameSupply) -> AssumptionVar:
    return AssumptionVar(name, supply.draw(), formula)


# ---------------------------------------------------------------------------
# Axioms


class AxiomId:
    """Base class of the closed set of axiom schemes."""

    __slots__ = ()


@dataclass(frozen=True)
class Truth(AxiomId):
    pass


@dataclass(frozen=True)
class BoolCases(AxiomId):
    var: ObjVar
    body: Formula


@dataclass(frozen=True)
class IndNat(AxiomId):
    var: ObjVar
    body: Formula


@dataclass(frozen=True)
class IndList(AxiomId):
    var: ObjVar
    elem_var: ObjVar
    body: Formula


@dataclass(frozen=True)
class BotPlus(AxiomId):
    pass


@dataclass(frozen=True)
class OrIntroL(AxiomId):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class OrIntroR(AxiomId):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class OrElim(AxiomId):
    left: Formula
    right: Formula
    concl: Formula


@dataclass(frozen=True)
class ExIntro(AxiomId):
    body: Formula
    var: ObjVar
    witness: Term


@dataclass(frozen=True)
class ExElim(AxiomId):
    body: Formula
    var: ObjVar
    concl: Formula


@dataclass(frozen=True)
class Lem(AxiomId):
    formula: Formula


_BASE_THEORIES = frozenset(TheoryId)
_AXIOM_AVAILABILITY = {
    Truth: (_BASE_THEORIES, TheoryId.NA),
    BoolCases: (_BASE_THEORIES, TheoryId.NA),
    IndNat: (_BASE_THEORIES, TheoryId.NA),
    IndList: (_BASE_THEORIES, TheoryId.NA),
    BotPlus: (frozenset({TheoryId.MA}), TheoryId.MA),
    OrIntroL: (frozenset({TheoryId.HA, TheoryId.PA}), TheoryId.HA),
    OrIntroR: (frozenset({TheoryId.HA, TheoryId.PA}), TheoryId.HA),
    OrElim: (frozenset({TheoryId.HA, TheoryId.PA}), TheoryId.HA),
    ExIntro: (frozenset({TheoryId.HA, TheoryId.PA}), TheoryId.HA),
    ExElim: (frozenset({TheoryId.HA, TheoryId.PA}), TheoryId.HA),
    Lem: (frozenset({TheoryId.PA}), TheoryId.PA),
}


def axiom_schema(ax: AxiomId, supply: NameSupply | None = None) -> Formula:
    """The concluding formula of an axiom scheme instance."""
    if supply is None:
        supply = NameSupply()
    match ax:
        case Truth():
            return TRUTH
        case BoolCases(b, a):
            if b.ty != BOOL:
                raise TypeError("case-distinction axiom needs a boolean variable")
            a_tt = subst_formula_var(a, b, Const("tt"), supply)
            a_ff = subst_formula_var(a, b, Const("ff"), supply)
            return All(b, imp(a_tt, a_ff, a))
        case IndNat(n, a):
            if n.ty != NAT:
                raise TypeError("nat induction needs a variable of type nat")
            a_zero = subst_formula_var(a, n, Const("zero"), supply)
            a_succ = subst_formula_var(a, n, app(Const("succ"), Var(n)), supply)
            return All(n, imp(a_zero, All(n, Imp(a, a_succ)), a))
        case IndList(l, x, a):
            if not isinstance(l.ty, ListType):
                raise TypeError("list induction needs a variable of list type")
            if x.ty != l.ty.elem:
                raise TypeError("element variable type must match the list type")
            elem = l.ty.elem
            a_nil = subst_formula_var(a, l, Const("nil", (elem,)), supply)
            a_cons = subst_formula_var(
                a, l, app(Const("cons", (elem,)), Var(x), Var(l)), supply)
            return All(l, imp(a_nil, All(x, All(l, Imp(a, a_cons))), a))
        case BotPlus():
            return Imp(FALSITY, BOT)
        case OrIntroL(a, b):
            return Imp(a, Or(a, b))
        case OrIntroR(a, b):
            return Imp(b, Or(a, b))
        case OrElim(a, b, c):
            return imp(Or(a, b), Imp(a, c), Imp(b, c), c)
        case ExIntro(a, x, t):
            if t.ty != x.ty:
                raise TypeError("existence witness type must match the variable")
            return Imp(subst_formula_var(a, x, t, supply), Ex(x, a))
        case ExElim(a, x, c):
            if x in formula_free_vars(c):
                raise EigenvariableError(
                    "existence elimination variable is free in the conclusion")
            return imp(Ex(x, a), All(x, Imp(a, c)), c)
        case Lem(a):
            return Or(a, neg(a))
    raise ValueError(f"unexpected axiom {ax!r}")


# ---------------------------------------------------------------------------
# Proofs


_TOKEN = object()


class Proof:
    """Checked natural-deduction proof term.

    ``rule`` is one of assume / axiom / and_intro / proj / imp_elim /
    imp_intro / all_elim / all_intro; ``children`` are sub-proofs and
    ``params`` the rule parameters (assumption variables, terms, ...).
    """

    __slots__ = ("rule", "children", "params", "conclusion",
                 "free_assumptions", "min_theory")

    def __init__(self, token, rule, children, params, conclusion,
                 free_assumptions, min_theory):
        if token is not _TOKEN:
            raise TypeError("proofs can only be built via the kernel constructors")
        self.rule = rule
        self.children = children
        self.params = params
        self.conclusion = conclusion
        self.free_assumptions = free_assumptions
        self.min_theory = min_theory

    def __repr__(self):
        return (f"<Proof {self.rule} |- {self.conclusion!r} "
                f"[{self.min_theory.value}]>")


@dataclass(frozen=True)
class Judgement:
    theory: TheoryId
    assumptions: frozenset[tuple[AssumptionVar, Formula]]
    conclusion: Formula


def inspect(m: Proof) -> Judgement:
    return Judgement(
        theory=m.min_theory,
        assumptions=frozenset((u, u.formula) for u in m.free_assumptions),
        conclusion=m.conclusion,
    )


def _merge_assumptions(*sets: frozenset[AssumptionVar]) -> frozenset[AssumptionVar]:
    merged = frozenset().union(*sets)
    seen: dict[tuple[str, int], AssumptionVar] = {}
    for u in merged:
        key = (u.name, u.index)
        if key in seen and seen[key] != u:
            raise ShapeError(
                f"assumption variable {u.name}_{u.index} reused at a "
                "different formula")
        seen[key] = u
    return merged


def assume(u: AssumptionVar) -> Proof:
    return Proof(_TOKEN, "assume", (), (u,), u.formula, frozenset((u,)),
                 min_language(u.formula))


def axiom(ax: AxiomId, th: TheoryId,
          supply: NameSupply | None = None) -> Proof:
    available, home = _AXIOM_AVAILABILITY[type(ax)]
    if th not in available:
        raise TheoryError(
            f"axiom {type(ax).__name__} is not available in {th.value}")
    concl = axiom_schema(ax, supply)
    min_theory = theory_join(home, min_language(concl))
    if not theory_leq(min_theory, th):
        raise TheoryError(
            f"axiom instance forces theory {min_theory.value}, "
            f"requested {th.value}")
    return Proof(_TOKEN, "axiom", (), (ax,), concl, frozenset(), min_theory)


def and_intro(m: Proof, n: Proof) -> Proof:
    free = _merge_assumptions(m.free_assumptions, n.free_assumptions)
    return Proof(_TOKEN, "and_intro", (m, n), (),
                 And(m.conclusion, n.conclusion), free,
                 theory_join(m.min_theory, n.min_theory))


def proj(side: int, m: Proof) -> Proof:
    if side not in (0, 1):
        raise ShapeError("projection side must be 0 or 1")
    if not isinstance(m.conclusion, And):
        raise ShapeError(f"projection needs a conjunction, got {m.conclusion!r}")
    concl = m.conclusion.left if side == 0 else m.conclusion.right
    return Proof(_TOKEN, "proj", (m,), (side,), concl, m.free_assumptions,
                 m.min_theory)


def imp_elim(m: Proof, n: Proof) -> Proof:
    if not isinstance(m.conclusion, Imp):
        raise ShapeError(f"modus ponens needs an implication, got {m.conclusion!r}")
    if not alpha_eq_formula(m.conclusion.prem, n.conclusion):
        raise ShapeError(
            f"premise mismatch: expected {m.conclusion.prem!r}, "
            f"got {n.conclusion!r}")
    free = _merge_assumptions(m.free_assumptions, n.free_assumptions)
    return Proof(_TOKEN, "imp_elim", (m, n), (), m.conclusion.concl, free,
                 theory_join(m.min_theory, n.min_theory))


def imp_elims(m: Proof, *args: Proof) -> Proof:
    for n in args:
        m = imp_elim(m, n)
    return m


def imp_intro(u: AssumptionVar, m: Proof) -> Proof:
    free = frozenset(v for v in m.free_assumptions if v != u)
    min_theory = theory_join(m.min_theory, min_language(u.formula))
    return Proof(_TOKEN, "imp_intro", (m,), (u,), Imp(u.formula, m.conclusion),
                 free, min_theory)


def imp_intros(m: Proof, *us: AssumptionVar) -> Proof:
    for u in reversed(us):
        m = imp_intro(u, m)
    return m


def all_elim(m: Proof, t: Term, supply: NameSupply | None = None) -> Proof:
    if not isinstance(m.conclusion, All):
        raise ShapeError(
            f"instantiation needs a universal formula, got {m.conclusion!r}")
    x, body = m.conclusion.bound, m.conclusion.body
    if t.ty != x.ty:
        raise TypeError(f"instantiating term type {t.ty} does not match {x.ty}")
    concl = subst_formula_var(body, x, t, supply)
    return Proof(_TOKEN, "all_elim", (m,), (t,), concl, m.free_assumptions,
                 m.min_theory)


def all_intro(x: ObjVar, m: Proof) -> Proof:
    for u in m.free_assumptions:
        if x in formula_free_vars(u.formula):
            raise EigenvariableError(
                f"variable {x.name}_{x.index} is free in open assumption "
                f"{u.name}_{u.index}")
    return Proof(_TOKEN, "all_intro", (m,), (x,), All(x, m.conclusion),
                 m.free_assumptions, m.min_theory)


# ---------------------------------------------------------------------------
# Generic builder and re-checking


def build(rule: str, premises, params=(),
          supply: NameSupply | None = None) -> Proof:
    """Dispatch to the checked constructor named by ``rule``."""
    premises = tuple(premises)
    params = tuple(params)
    match rule:
        case "assume":
            return assume(*params)
        case "axiom":
            return axiom(*params, supply=supply)
        case "and_intro":
            return and_intro(*premises)
        case "proj":
            return proj(params[0], *premises)
        case "imp_elim":
            return imp_elim(*premises)
        case "imp_intro":
            return imp_intro(params[0], *premises)
        case "all_elim":
            return all_elim(premises[0], params[0], supply)
        case "all_intro":
            return all_intro(params[0], *premises)
    raise ShapeError(f"unknown rule {rule!r}")


def recheck(m: Proof) -> Proof:
    """Rebuild a proof bottom-up through the constructors.

    Used to confirm that the cached judgement of a stored or deserialized
    proof really is derivable.
    """
    children = tuple(recheck(c) for c in m.children)
    if m.rule == "axiom":
        rebuilt = axiom(m.params[0], m.min_theory)
    else:
        rebuilt = build(m.rule, children, m.params)
    return rebuilt
