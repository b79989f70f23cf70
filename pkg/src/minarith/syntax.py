"""Simple types, object variables, and typed lambda terms.

Terms are immutable and well-typed by construction: ``App`` rejects argument
type mismatches with ``TypeError`` at creation time, so ``type_of`` is total.
Capture-avoiding substitution draws renamed binders from an explicit
``NameSupply``; alpha-equality goes through a canonical nameless form.
"""

from __future__ import annotations

from dataclasses import dataclass, field


# ---------------------------------------------------------------------------
# Types


class ObjType:
    """Base class of the closed set of type variants."""

    __slots__ = ()


@dataclass(frozen=True)
class TypeVar(ObjType):
    name: str


@dataclass(frozen=True)
class BoolType(ObjType):
    pass


@dataclass(frozen=True)
class NatType(ObjType):
    pass


@dataclass(frozen=True)
class ListType(ObjType):
    elem: ObjType


@dataclass(frozen=True)
class Arrow(ObjType):
    dom: ObjType
    cod: ObjType


@dataclass(frozen=True)
class Prod(ObjType):
    left: ObjType
    right: ObjType


BOOL = BoolType()
NAT = NatType()


def arrow(*types: ObjType) -> ObjType:
    """Right-nested function type ``t1 -> t2 -> ... -> tn``."""
    if not types:
        raise ValueError("arrow needs at least one type")
    result = types[-1]
    for ty in reversed(types[:-1]):
        result = Arrow(ty, result)
    return result


# ---------------------------------------------------------------------------
# Variables and freshness


@dataclass(frozen=True)
class ObjVar:
    """Named object variable; the index disambiguates renamed copies."""

    name: str
    index: int
    ty: ObjType


class NameSupply:
    """Strictly increasing index source for fresh variable names.

    A supply is deliberately mutable and explicitly passed: each thread of
    work owns its own supply, everything else stays pure.
    """

    def __init__(self, start: int = 0):
        self.next_index = start

    def draw(self) -> int:
        index = self.next_index
        self.next_index += 1
        return index

    def fresh(self, var: ObjVar) -> ObjVar:
        return ObjVar(var.name, self.draw(), var.ty)

    def fresh_avoiding(self, var: ObjVar, avoid) -> ObjVar:
        """Fresh copy of ``var`` whose (name, index, ty) is not in ``avoid``."""
        candidate = self.fresh(var)
        while candidate in avoid:
            candidate = self.fresh(var)
        return candidate


# ---------------------------------------------------------------------------
# Terms

# tag -> (number of type parameters, type builder)
_CONST_SPECS = {
    "pair": (2, lambda t, r: arrow(t, r, Prod(t, r))),
    "tt": (0, lambda: BOOL),
    "ff": (0, lambda: BOOL),
    "zero": (0, lambda: NAT),
    "succ": (0, lambda: Arrow(NAT, NAT)),
    "nil": (1, lambda t: ListType(t)),
    "cons": (1, lambda t: arrow(t, ListType(t), ListType(t))),
    "split": (3, lambda r, s, t: arrow(Prod(r, s), arrow(r, s, t), t)),
    "cases": (1, lambda t: arrow(BOOL, t, t, t)),
    "recnat": (1, lambda t: arrow(NAT, t, arrow(NAT, t, t), t)),
    "reclist": (2, lambda r, t: arrow(
        ListType(r), t, arrow(r, ListType(r), t, t), t)),
}


class Term:
    """Base class of the closed set of term variants."""

    __slots__ = ()

    @property
    def ty(self) -> ObjType:
        return self._ty  # set by each variant


@dataclass(frozen=True)
class Var(Term):
    var: ObjVar

    @property
    def ty(self) -> ObjType:
        return self.var.ty


@dataclass(frozen=True)
class Const(Term):
    tag: str
    params: tuple[ObjType, ...] = ()
    _ty: ObjType = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        spec = _CONST_SPECS.get(self.tag)
        if spec is None:
            raise ValueError(f"unknown constant tag {self.tag!r}")
        arity, build = spec
        if len(self.params) != arity:
            raise TypeError(
                f"constant {self.tag!r} takes {arity} type parameters, "
                f"got {len(self.params)}")
        object.__setattr__(self, "_ty", build(*self.params))


@dataclass(frozen=True)
class App(Term):
    fun: Term
    arg: Term
    _ty: ObjType = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        fun_ty = self.fun.ty
        if not isinstance(fun_ty, Arrow):
            raise TypeError(f"applied term has non-arrow type {fun_ty}")
        if fun_ty.dom != self.arg.ty:
            raise TypeError(
                f"argument type {self.arg.ty} does not match domain {fun_ty.dom}")
        object.__setattr__(self, "_ty", fun_ty.cod)


@dataclass(frozen=True)
class Lam(Term):
    bound: ObjVar
    body: Term

    @property
    def ty(self) -> ObjType:
        return Arrow(self.bound.ty, self.body.ty)


TT = Const("tt")
FF = Const("ff")
ZERO = Const("zero")
SUCC = Const("succ")


def app(fun: Term, *args: Term) -> Term:
    for arg in args:
        fun = App(fun, arg)
    return fun


def type_of(t: Term) -> ObjType:
    return t.ty


def free_term_vars(t: Term) -> frozenset[ObjVar]:
    match t:
        case Var(v):
            return frozenset((v,))
        case Const():
            return frozenset()
        case App(fun, arg):
            return free_term_vars(fun) | free_term_vars(arg)
        case Lam(bound, body):
            return free_term_vars(body) - {bound}
    raise ValueError(f"unexpected term {t!r}")


def subst_term(t: Term, x: ObjVar, s: Term,
               supply: NameSupply | None = None) -> Term:
    """Replace free occurrences of ``x`` in ``t`` by ``s``, avoiding capture."""
    if s.ty != x.ty:
        raise TypeError(f"cannot substitute term of type {s.ty} for {x}")
    if supply is None:
        supply = NameSupply()
    fv_s = free_term_vars(s)

    def go(t: Term) -> Term:
        match t:
            case Var(v):
                return s if v == x else t
            case Const():
                return t
            case App(fun, arg):
                return App(go(fun), go(arg))
            case Lam(bound, body):
                if bound == x:
                    return t
                if bound in fv_s and x in free_term_vars(body):
                    avoid = fv_s | free_term_vars(body) | {x}
                    renamed = supply.fresh_avoiding(bound, avoid)
                    body = subst_term(body, bound, Var(renamed), supply)
                    return Lam(renamed, go(body))
                return Lam(bound, go(body))
        raise ValueError(f"unexpected term {t!r}")

    return go(t)


def canonical_term(t: Term, env: dict[ObjVar, int] | None = None,
                   depth: int = 0):
    """Nameless (de Bruijn level) form used for alpha-comparison."""
    env = env or {}

    def go(t: Term, env: dict[ObjVar, int], depth: int):
        match t:
            case Var(v):
                if v in env:
                    return ("bound", env[v])
                return ("free", v.name, v.index, v.ty)
            case Const(tag, params):
                return ("const", tag, params)
            case App(fun, arg):
                return ("app", go(fun, env, depth), go(arg, env, depth))
            case Lam(bound, body):
                inner = dict(env)
                inner[bound] = depth
                return ("lam", bound.ty, go(body, inner, depth + 1))
        raise ValueError(f"unexpected term {t!r}")

    return go(t, env, depth)


def alpha_eq(a: Term, b: Term) -> bool:
    return canonical_term(a) == canonical_term(b)


def max_var_index(t: Term) -> int:
    """Largest variable index occurring anywhere in ``t`` (-1 if none)."""
    match t:
        case Var(v):
            return v.index
        case Const():
            return -1
        case App(fun, arg):
            return max(max_var_index(fun), max_var_index(arg))
        case Lam(bound, body):
            return max(bound.index, max_var_index(body))
    raise ValueError(f"unexpected term {t!r}")
