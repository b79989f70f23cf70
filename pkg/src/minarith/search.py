"""Bounded proof search and random generation, used as test oracles.

The searcher is goal-directed, sound, and deliberately incomplete: every
positive verdict carries a kernel-checked witness, and a negative verdict
only reports depth exhaustion, never non-derivability.  Induction axioms are
excluded; instantiation terms come from a finite pool.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import LanguageError
from .formula import (BOT, FALSITY, All, And, Atom, Bot, Ex, Formula,
                      Imp, Or, TheoryId, alpha_eq_formula, formula_free_vars,
                      formula_size, in_language, neg, subst_formula_var)
from .kernel import (BotPlus, ExIntro, Lem, OrIntroL, OrIntroR,
                     Proof, Truth, all_elim, all_intro, and_intro, assume,
                     axiom, fresh_assumption, imp_elim, imp_intro, proj)
from .syntax import (BOOL, FF, NAT, TT, ZERO, App, Lam, NameSupply,
                     ObjType, ObjVar, Term, Var)


# ---------------------------------------------------------------------------
# Verdicts


class SearchVerdict:
    """Base class of the two search outcomes."""

    __slots__ = ()


@dataclass(frozen=True)
class Derivable(SearchVerdict):
    witness: Proof


@dataclass(frozen=True)
class Unknown(SearchVerdict):
    depth_exhausted: int


# ---------------------------------------------------------------------------
# Term pool


def _subterms(t: Term, acc: set[Term]) -> None:
    acc.add(t)
    match t:
        case App(fun, arg):
            _subterms(fun, acc)
            _subterms(arg, acc)
        case Lam(_, body):
            _subterms(body, acc)
        case _:
            pass


def _term_pool(a: Formula) -> tuple[Term, ...]:
    acc: set[Term] = {TT, FF, ZERO}

    def walk(f: Formula) -> None:
        match f:
            case Atom(t):
                _subterms(t, acc)
            case Imp(p, c):
                walk(p)
                walk(c)
            case And(l, r) | Or(l, r):
                walk(l)
                walk(r)
            case All(_, b) | Ex(_, b):
                walk(b)
            case Bot():
                pass

    walk(a)
    return tuple(sorted(acc, key=repr))


# ---------------------------------------------------------------------------
# Backward search


class _Budget:
    def __init__(self, cap: int):
        self.left = cap

    def spend(self) -> bool:
        if self.left <= 0:
            return False
        self.left -= 1
        return True


def bounded_derivable(a: Formula, th: TheoryId, depth: int,
                      node_cap: int = 20000) -> SearchVerdict:
    """Search for a closed proof of ``a`` in ``th`` up to the given depth."""
    if not in_language(a, th):
        raise LanguageError(f"formula is not in the language of {th.value}")
    supply = NameSupply()
    pool = _term_pool(a)
    budget = _Budget(node_cap)
    witness = _prove((), a, th, depth, pool, supply, budget)
    if witness is None:
        return Unknown(depth)
    return Derivable(witness)


def _pool_of_type(pool: tuple[Term, ...], ty: ObjType) -> tuple[Term, ...]:
    return tuple(t for t in pool if t.ty == ty)


def _prove(ctx, goal: Formula, th: TheoryId, depth: int, pool, supply,
           budget) -> Proof | None:
    if depth <= 0 or not budget.spend():
        return None
    for u in ctx:
        if alpha_eq_formula(u.formula, goal):
            return assume(u)

    match goal:
        case Atom(t) if t == TT:
            return axiom(Truth(), th)
        case Imp(p, c):
            u = fresh_assumption("h", p, supply)
            sub = _prove(ctx + (u,), c, th, depth - 1, pool, supply, budget)
            if sub is not None:
                return imp_intro(u, sub)
        case And(l, r):
            left = _prove(ctx, l, th, depth - 1, pool, supply, budget)
            if left is not None:
                right = _prove(ctx, r, th, depth - 1, pool, supply, budget)
                if right is not None:
                    return and_intro(left, right)
        case All(x, b):
            avoid = set(formula_free_vars(goal))
            for u in ctx:
                avoid |= formula_free_vars(u.formula)
            fresh = supply.fresh_avoiding(x, avoid)
            body = subst_formula_var(b, x, Var(fresh), supply)
            sub = _prove(ctx, body, th, depth - 1, pool, supply, budget)
            if sub is not None:
                return all_intro(fresh, sub)
        case Bot() if th == TheoryId.MA:
            sub = _prove(ctx, FALSITY, th, depth - 1, pool, supply, budget)
            if sub is not None:
                return imp_elim(axiom(BotPlus(), th), sub)
        case Or(l, r):
            if th == TheoryId.PA and alpha_eq_formula(goal, Or(l, neg(l))):
                return axiom(Lem(l), th, supply)
            left = _prove(ctx, l, th, depth - 1, pool, supply, budget)
            if left is not None:
                return imp_elim(axiom(OrIntroL(l, r), th, supply), left)
            right = _prove(ctx, r, th, depth - 1, pool, supply, budget)
            if right is not None:
                return imp_elim(axiom(OrIntroR(l, r), th, supply), right)
        case Ex(x, b):
            for t in _pool_of_type(pool, x.ty):
                inst = subst_formula_var(b, x, t, supply)
                sub = _prove(ctx, inst, th, depth - 1, pool, supply, budget)
                if sub is not None:
                    return imp_elim(axiom(ExIntro(b, x, t), th, supply), sub)
        case _:
            pass

    for u in ctx:
        found = _focus(assume(u), ctx, goal, th, depth - 1, pool, supply,
                       budget)
        if found is not None:
            return found
    return None


def _focus(p: Proof, ctx, goal: Formula, th: TheoryId, depth: int, pool,
           supply, budget) -> Proof | None:
    """Left rules: decompose a hypothesis towards the goal."""
    if alpha_eq_formula(p.conclusion, goal):
        return p
    if depth <= 0 or not budget.spend():
        return None
    match p.conclusion:
        case And(_, _):
            for side in (0, 1):
                found = _focus(proj(side, p), ctx, goal, th, depth - 1, pool,
                               supply, budget)
                if found is not None:
                    return found
        case Imp(prem, _):
            sub = _prove(ctx, prem, th, depth - 1, pool, supply, budget)
            if sub is not None:
                return _focus(imp_elim(p, sub), ctx, goal, th, depth - 1,
                              pool, supply, budget)
        case All(x, _):
            for t in _pool_of_type(pool, x.ty):
                found = _focus(all_elim(p, t, supply), ctx, goal, th,
                               depth - 1, pool, supply, budget)
                if found is not None:
                    return found
        case _:
            pass
    return None


# ---------------------------------------------------------------------------
# Random formula generation


_DEFAULT_ATOMS = (TT, FF)


@dataclass(frozen=True)
class GenConfig:
    seed: int
    max_size: int = 8
    language: TheoryId = TheoryId.MA
    atom_pool: tuple[Term, ...] = _DEFAULT_ATOMS


def gen_formula(cfg: GenConfig) -> Formula:
    """Deterministic-in-seed random formula within the configured language."""
    rng = random.Random(cfg.seed)
    state = {"next": 0}
    out = _gen(rng, max(cfg.max_size, 1), cfg, (), state)
    assert in_language(out, cfg.language)
    assert formula_size(out) <= max(cfg.max_size, 1)
    return out


def _gen(rng, size: int, cfg: GenConfig, bound_bools, state) -> Formula:
    lang = cfg.language
    if size <= 1:
        if lang == TheoryId.MA and rng.random() < 0.25:
            return BOT
        choices = list(cfg.atom_pool)
        # bound boolean variables keep the forall-over-Bool clauses honest
        if bound_bools and rng.random() < 0.6:
            return Atom(Var(rng.choice(bound_bools)))
        return Atom(rng.choice(choices))

    connectives = ["all"]
    if size >= 3:
        connectives += ["imp", "imp", "and"]
        if lang in (TheoryId.HA, TheoryId.PA):
            connectives.append("or")
    if lang in (TheoryId.HA, TheoryId.PA):
        connectives.append("ex")
    match rng.choice(connectives):
        case "imp":
            split = rng.randint(1, size - 2)
            return Imp(_gen(rng, split, cfg, bound_bools, state),
                       _gen(rng, size - 1 - split, cfg, bound_bools, state))
        case "and":
            split = rng.randint(1, size - 2)
            return And(_gen(rng, split, cfg, bound_bools, state),
                       _gen(rng, size - 1 - split, cfg, bound_bools, state))
        case "all":
            ty = BOOL if rng.random() < 0.7 else NAT
            x = ObjVar("x", state["next"], ty)
            state["next"] += 1
            inner = bound_bools + (x,) if ty == BOOL else bound_bools
            return All(x, _gen(rng, size - 1, cfg, inner, state))
        case "or":
            split = rng.randint(1, size - 2)
            return Or(_gen(rng, split, cfg, bound_bools, state),
                      _gen(rng, size - 1 - split, cfg, bound_bools, state))
        case "ex":
            ty = BOOL if rng.random() < 0.7 else NAT
            x = ObjVar("x", state["next"], ty)
            state["next"] += 1
            inner = bound_bools + (x,) if ty == BOOL else bound_bools
            return Ex(x, _gen(rng, size - 1, cfg, inner, state))
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# Random proof generation (MA)


def gen_proof(seed: int, size: int = 12,
              supply: NameSupply | None = None) -> Proof:
    """Random MA proof built forward through the kernel constructors.

    Deterministic in the seed.  Biased so that bottom occurs somewhere in
    most outputs, which is what the bottom-substitution tests need.
    """
    rng = random.Random(seed)
    if supply is None:
        supply = NameSupply()
    return _gen_proof(rng, size, supply)


def _gen_proof(rng, size: int, supply: NameSupply) -> Proof:
    if size <= 1:
        match rng.randrange(4):
            case 0:
                return axiom(Truth(), TheoryId.MA)
            case 1:
                return axiom(BotPlus(), TheoryId.MA)
            case _:
                cfg = GenConfig(seed=rng.randrange(1 << 30), max_size=4)
                u = fresh_assumption("u", gen_formula(cfg), supply)
                return assume(u)

    match rng.randrange(6):
        case 0:  # discharge one open assumption, or a vacuous fresh one
            child = _gen_proof(rng, size - 1, supply)
            frees = sorted(child.free_assumptions,
                           key=lambda u: (u.name, u.index))
            if frees and rng.random() < 0.8:
                u = rng.choice(frees)
            else:
                cfg = GenConfig(seed=rng.randrange(1 << 30), max_size=3)
                u = fresh_assumption("v", gen_formula(cfg), supply)
            return imp_intro(u, child)
        case 1:
            half = max(size // 2, 1)
            return and_intro(_gen_proof(rng, half, supply),
                             _gen_proof(rng, size - 1 - half, supply))
        case 2:
            child = _gen_proof(rng, size - 1, supply)
            if isinstance(child.conclusion, And):
                return proj(rng.randrange(2), child)
            return child
        case 3:  # modus ponens against a freshly introduced implication
            half = max(size // 2, 1)
            arg = _gen_proof(rng, half, supply)
            body = _gen_proof(rng, size - 1 - half, supply)
            u = fresh_assumption("w", arg.conclusion, supply)
            return imp_elim(imp_intro(u, body), arg)
        case 4:  # vacuous generalization, sometimes instantiated again
            child = _gen_proof(rng, size - 1, supply)
            x = ObjVar("y", supply.draw(), BOOL)
            gen = all_intro(x, child)
            if rng.random() < 0.5:
                return all_elim(gen, rng.choice((TT, FF)), supply)
            return gen
        case 5:
            child = _gen_proof(rng, size - 1, supply)
            u = fresh_assumption("u", BOT, supply)
            return imp_intro(u, child)
    raise AssertionError("unreachable")
