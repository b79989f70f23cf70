"""S-expression reading and printing for types, terms, formulas, and proofs.

One grammar shared between the test fixtures and the CLI.  Parsing a proof
goes straight through the kernel constructors, so a proof that parses has
already been checked.
"""

from __future__ import annotations

from .errors import ParseError
from .formula import (BOT, All, And, Atom, Bot, Ex, Formula, Imp, Or,
                      TheoryId)
from .kernel import (AssumptionVar, AxiomId, BoolCases, BotPlus, ExElim,
                     ExIntro, IndList, IndNat, Lem, OrElim, OrIntroL,
                     OrIntroR, Proof, Truth, all_elim, all_intro, and_intro,
                     assume, axiom, imp_elim, imp_intro, proj)
from .syntax import (App, Arrow, BoolType, Const, Lam, ListType, NameSupply,
                     NatType, ObjType, ObjVar, Prod, Term, TypeVar, Var,
                     _CONST_SPECS)


# ---------------------------------------------------------------------------
# Reader


def _tokenize(text: str) -> list[str]:
    out: list[str] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()":
            out.append(c)
            i += 1
        elif c == ";":
            while i < n and text[i] != "\n":
                i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "();":
                j += 1
            out.append(text[i:j])
            i = j
    return out


def read_sexpr(text: str):
    """Parse one toplevel form into nested lists of symbol strings."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input")
    form, rest = _read(tokens, 0)
    if rest != len(tokens):
        raise ParseError("trailing input after the toplevel form")
    return form


def _read(tokens: list[str], i: int):
    if i >= len(tokens):
        raise ParseError("unexpected end of input")
    tok = tokens[i]
    if tok == "(":
        items = []
        i += 1
        while i < len(tokens) and tokens[i] != ")":
            item, i = _read(tokens, i)
            items.append(item)
        if i >= len(tokens):
            raise ParseError("unbalanced parenthesis")
        return items, i + 1
    if tok == ")":
        raise ParseError("unexpected closing parenthesis")
    return tok, i + 1


def _expect_list(form, what: str) -> list:
    if not isinstance(form, list) or not form:
        raise ParseError(f"expected a {what} form, got {form!r}")
    return form


def _int(tok, what: str) -> int:
    try:
        return int(tok)
    except (TypeError, ValueError):
        raise ParseError(f"expected an integer {what}, got {tok!r}") from None


# ---------------------------------------------------------------------------
# Types


def type_from_tree(form) -> ObjType:
    form = _expect_list(form, "type")
    match form:
        case ["bool"]:
            return BoolType()
        case ["nat"]:
            return NatType()
        case ["tvar", name] if isinstance(name, str):
            return TypeVar(name)
        case ["list", t]:
            return ListType(type_from_tree(t))
        case ["arrow", t, r]:
            return Arrow(type_from_tree(t), type_from_tree(r))
        case ["prod", t, r]:
            return Prod(type_from_tree(t), type_from_tree(r))
    raise ParseError(f"unrecognized type form {form!r}")


def print_type(ty: ObjType) -> str:
    match ty:
        case BoolType():
            return "(bool)"
        case NatType():
            return "(nat)"
        case TypeVar(name):
            return f"(tvar {name})"
        case ListType(t):
            return f"(list {print_type(t)})"
        case Arrow(t, r):
            return f"(arrow {print_type(t)} {print_type(r)})"
        case Prod(t, r):
            return f"(prod {print_type(t)} {print_type(r)})"
    raise ValueError(f"unexpected type {ty!r}")


def parse_type(text: str) -> ObjType:
    return type_from_tree(read_sexpr(text))


# ---------------------------------------------------------------------------
# Terms


def var_from_tree(form) -> ObjVar:
    form = _expect_list(form, "variable")
    match form:
        case ["var", name, idx, ty] if isinstance(name, str):
            return ObjVar(name, _int(idx, "variable index"),
                          type_from_tree(ty))
    raise ParseError(f"unrecognized variable form {form!r}")


def term_from_tree(form) -> Term:
    form = _expect_list(form, "term")
    head = form[0]
    if head == "var":
        return Var(var_from_tree(form))
    if head == "app":
        if len(form) != 3:
            raise ParseError("app takes exactly two subterms")
        try:
            return App(term_from_tree(form[1]), term_from_tree(form[2]))
        except TypeError as e:
            raise ParseError(f"ill-typed application: {e}") from None
    if head == "lam":
        if len(form) != 3:
            raise ParseError("lam takes a variable and a body")
        return Lam(var_from_tree(form[1]), term_from_tree(form[2]))
    if isinstance(head, str) and head in _CONST_SPECS:
        arity = _CONST_SPECS[head][0]
        if len(form) != 1 + arity:
            raise ParseError(
                f"constant {head} takes {arity} type parameters")
        return Const(head, tuple(type_from_tree(p) for p in form[1:]))
    raise ParseError(f"unrecognized term form {form!r}")


def print_var(v: ObjVar) -> str:
    return f"(var {v.name} {v.index} {print_type(v.ty)})"


def print_term(t: Term) -> str:
    match t:
        case Var(v):
            return print_var(v)
        case Const(tag, params):
            if not params:
                return f"({tag})"
            inner = " ".join(print_type(p) for p in params)
            return f"({tag} {inner})"
        case App(fun, arg):
            return f"(app {print_term(fun)} {print_term(arg)})"
        case Lam(bound, body):
            return f"(lam {print_var(bound)} {print_term(body)})"
    raise ValueError(f"unexpected term {t!r}")


def parse_term(text: str) -> Term:
    return term_from_tree(read_sexpr(text))


# ---------------------------------------------------------------------------
# Formulas


def formula_from_tree(form) -> Formula:
    form = _expect_list(form, "formula")
    match form:
        case ["bot"]:
            return BOT
        case ["atom", t]:
            try:
                return Atom(term_from_tree(t))
            except TypeError as e:
                raise ParseError(f"non-boolean atom payload: {e}") from None
        case ["imp", a, b]:
            return Imp(formula_from_tree(a), formula_from_tree(b))
        case ["and", a, b]:
            return And(formula_from_tree(a), formula_from_tree(b))
        case ["or", a, b]:
            return Or(formula_from_tree(a), formula_from_tree(b))
        case ["all", v, a]:
            return All(var_from_tree(v), formula_from_tree(a))
        case ["ex", v, a]:
            return Ex(var_from_tree(v), formula_from_tree(a))
    raise ParseError(f"unrecognized formula form {form!r}")


def print_formula(a: Formula) -> str:
    match a:
        case Bot():
            return "(bot)"
        case Atom(t):
            return f"(atom {print_term(t)})"
        case Imp(p, c):
            return f"(imp {print_formula(p)} {print_formula(c)})"
        case And(l, r):
            return f"(and {print_formula(l)} {print_formula(r)})"
        case Or(l, r):
            return f"(or {print_formula(l)} {print_formula(r)})"
        case All(x, b):
            return f"(all {print_var(x)} {print_formula(b)})"
        case Ex(x, b):
            return f"(ex {print_var(x)} {print_formula(b)})"
    raise ValueError(f"unexpected formula {a!r}")


def parse_formula(text: str) -> Formula:
    return formula_from_tree(read_sexpr(text))


# ---------------------------------------------------------------------------
# Axiom identifiers


_AXIOM_TAGS = {
    Truth: "truth",
    BoolCases: "boolcases",
    IndNat: "indnat",
    IndList: "indlist",
    BotPlus: "botplus",
    OrIntroL: "or-intro-l",
    OrIntroR: "or-intro-r",
    OrElim: "or-elim",
    ExIntro: "ex-intro",
    ExElim: "ex-elim",
    Lem: "lem",
}


def axiom_from_tree(form) -> AxiomId:
    form = _expect_list(form, "axiom")
    match form:
        case ["axiom", "truth"]:
            return Truth()
        case ["axiom", "botplus"]:
            return BotPlus()
        case ["axiom", "boolcases", v, a]:
            return BoolCases(var_from_tree(v), formula_from_tree(a))
        case ["axiom", "indnat", v, a]:
            return IndNat(var_from_tree(v), formula_from_tree(a))
        case ["axiom", "indlist", l, x, a]:
            return IndList(var_from_tree(l), var_from_tree(x),
                           formula_from_tree(a))
        case ["axiom", "or-intro-l", a, b]:
            return OrIntroL(formula_from_tree(a), formula_from_tree(b))
        case ["axiom", "or-intro-r", a, b]:
            return OrIntroR(formula_from_tree(a), formula_from_tree(b))
        case ["axiom", "or-elim", a, b, c]:
            return OrElim(formula_from_tree(a), formula_from_tree(b),
                          formula_from_tree(c))
        case ["axiom", "ex-intro", a, v, t]:
            return ExIntro(formula_from_tree(a), var_from_tree(v),
                           term_from_tree(t))
        case ["axiom", "ex-elim", a, v, c]:
            return ExElim(formula_from_tree(a), var_from_tree(v),
                          formula_from_tree(c))
        case ["axiom", "lem", a]:
            return Lem(formula_from_tree(a))
    raise ParseError(f"unrecognized axiom form {form!r}")


def print_axiom(ax: AxiomId) -> str:
    tag = _AXIOM_TAGS[type(ax)]
    match ax:
        case Truth() | BotPlus():
            return f"(axiom {tag})"
        case BoolCases(v, a) | IndNat(v, a):
            return f"(axiom {tag} {print_var(v)} {print_formula(a)})"
        case IndList(l, x, a):
            return (f"(axiom {tag} {print_var(l)} {print_var(x)} "
                    f"{print_formula(a)})")
        case OrIntroL(a, b) | OrIntroR(a, b):
            return f"(axiom {tag} {print_formula(a)} {print_formula(b)})"
        case OrElim(a, b, c):
            return (f"(axiom {tag} {print_formula(a)} {print_formula(b)} "
                    f"{print_formula(c)})")
        case ExIntro(a, v, t):
            return (f"(axiom {tag} {print_formula(a)} {print_var(v)} "
                    f"{print_term(t)})")
        case ExElim(a, v, c):
            return (f"(axiom {tag} {print_formula(a)} {print_var(v)} "
                    f"{print_formula(c)})")
        case Lem(a):
            return f"(axiom {tag} {print_formula(a)})"
    raise ValueError(f"unexpected axiom {ax!r}")


# ---------------------------------------------------------------------------
# Proofs


def _assumption_from_tree(form) -> AssumptionVar:
    form = _expect_list(form, "assumption")
    match form:
        case ["assume", name, idx, a] if isinstance(name, str):
            return AssumptionVar(name, _int(idx, "assumption index"),
                                 formula_from_tree(a))
    raise ParseError(f"unrecognized assumption form {form!r}")


def proof_from_tree(form, th: TheoryId,
                    supply: NameSupply | None = None) -> Proof:
    """Build the proof through the kernel; kernel errors propagate."""
    if supply is None:
        supply = NameSupply()

    def go(form) -> Proof:
        form = _expect_list(form, "proof")
        match form:
            case ["assume", *_]:
                return assume(_assumption_from_tree(form))
            case ["axiom", *_]:
                return axiom(axiom_from_tree(form), th, supply)
            case ["pair-pf", m, n]:
                return and_intro(go(m), go(n))
            case ["proj0", m]:
                return proj(0, go(m))
            case ["proj1", m]:
                return proj(1, go(m))
            case ["app-pf", m, n]:
                return imp_elim(go(m), go(n))
            case ["lam-pf", u, m]:
                return imp_intro(_assumption_from_tree(u), go(m))
            case ["inst", m, t]:
                return all_elim(go(m), term_from_tree(t), supply)
            case ["gen", v, m]:
                return all_intro(var_from_tree(v), go(m))
        raise ParseError(f"unrecognized proof form {form!r}")

    return go(form)


def parse_proof(text: str, th: TheoryId,
                supply: NameSupply | None = None) -> Proof:
    return proof_from_tree(read_sexpr(text), th, supply)


def print_proof(m: Proof) -> str:
    match m.rule:
        case "assume":
            u = m.params[0]
            return f"(assume {u.name} {u.index} {print_formula(u.formula)})"
        case "axiom":
            return print_axiom(m.params[0])
        case "and_intro":
            return (f"(pair-pf {print_proof(m.children[0])} "
                    f"{print_proof(m.children[1])})")
        case "proj":
            return f"(proj{m.params[0]} {print_proof(m.children[0])})"
        case "imp_elim":
            return (f"(app-pf {print_proof(m.children[0])} "
                    f"{print_proof(m.children[1])})")
        case "imp_intro":
            u = m.params[0]
            head = f"(assume {u.name} {u.index} {print_formula(u.formula)})"
            return f"(lam-pf {head} {print_proof(m.children[0])})"
        case "all_elim":
            return (f"(inst {print_proof(m.children[0])} "
                    f"{print_term(m.params[0])})")
        case "all_intro":
            return (f"(gen {print_var(m.params[0])} "
                    f"{print_proof(m.children[0])})")
    raise ValueError(f"unexpected rule {m.rule!r}")
