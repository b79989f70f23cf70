"""Shared fixtures and helpers for the test suite."""

import json
from pathlib import Path

import pytest

from minarith import (All, App, Arrow, Atom, BOOL, BOT, Imp, NAT, NameSupply,
                      ObjVar, TheoryId, Var, all_elim, all_intro, assume,
                      fresh_assumption, imp_elim, imp_intro, imp_intros, neg,
                      parse_proof, subst_bot_falsity, theory_leq)
from minarith.errors import TheoryError

FIXTURE_DIR = Path(__file__).parent / "fixtures"


def load_manifest():
    entries = json.loads((FIXTURE_DIR / "fixtures.json").read_text())
    for e in entries:
        e["text"] = (FIXTURE_DIR / e["file"]).read_text()
    return entries


def check_fixture_proof(text: str, th: TheoryId):
    """Parse and check a proof the way the CLI check command does."""
    proof = parse_proof(text, th)
    if not theory_leq(proof.min_theory, th):
        raise TheoryError(
            f"proof needs {proof.min_theory.value}, requested {th.value}")
    return proof


def remark_st_formula():
    """The S -> T boundary formula of the strict-containment fixture.

    S = forall x (not not A -> A) and T = (forall x A -> bot) -> bot with
    A = atom(p x) for a nat variable x, so that S -> T escapes the definite
    class while (S -> T)^F -> (S -> T) is still derivable.
    """
    p = ObjVar("p", 0, Arrow(NAT, BOOL))
    x = ObjVar("x", 1, NAT)
    a = Atom(App(Var(p), Var(x)))
    s = All(x, Imp(neg(neg(a)), a))
    t = Imp(Imp(All(x, a), BOT), BOT)
    return Imp(s, t), x, a


def remark_st_proof():
    """Hand-built MA proof of (S -> T)^F -> (S -> T)."""
    st, x, a = remark_st_formula()
    s_part, t_part = st.prem, st.concl
    sp = NameSupply(100)
    stf = subst_bot_falsity(st)
    h = fresh_assumption("h", stf, sp)
    s = fresh_assumption("s", s_part, sp)
    w = fresh_assumption("w", t_part.prem, sp)
    na = fresh_assumption("na", neg(a), sp)
    u = fresh_assumption("u", All(x, a), sp)
    refute = imp_intro(u, imp_elim(assume(na),
                                   all_elim(assume(u), Var(x), sp)))
    nn_a = imp_intro(na, imp_elim(imp_elim(assume(h), assume(s)), refute))
    get_a = imp_elim(all_elim(assume(s), Var(x), sp), nn_a)
    proof = imp_intros(imp_elim(assume(w), all_intro(x, get_a)), h, s, w)
    return proof, st


@pytest.fixture
def supply():
    return NameSupply(10_000)
