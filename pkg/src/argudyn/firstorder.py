"""First-order formulas over attack structures: AST, builders, evaluator.

Formulas use one binary relation A (attack) plus problem-specific unary
relations (S, E0, T, E1, E2).  Builders that take a predicate accept either
a callable str -> Formula or a Formula whose designated free variable is
"x"; every substitution generates globally fresh bound variables, so
grafting can never capture.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Union

from .core import ArgumentationFramework, ArgumentSet, Semantics
from .errors import InvalidArity, UnboundVariable, UnsupportedSemantics
from .instances import ProblemInstance, ProblemKind

# -- AST --------------------------------------------------------------------


@dataclass(frozen=True)
class Eq:
    left: str
    right: str


@dataclass(frozen=True)
class App1:
    rel: str
    arg: str


@dataclass(frozen=True)
class App2:
    rel: str
    left: str
    right: str


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    items: tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    items: tuple["Formula", ...]


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


Formula = Union[Eq, App1, App2, Not, And, Or, Implies, Exists, Forall]
Pred = Callable[[str], Formula]


def conj(items: Iterable[Formula]) -> Formula:
    items = tuple(items)
    return items[0] if len(items) == 1 else And(items)


def disj(items: Iterable[Formula]) -> Formula:
    items = tuple(items)
    return items[0] if len(items) == 1 else Or(items)


def attacks(x: str, y: str) -> Formula:
    return App2("A", x, y)


# -- structural attributes ----------------------------------------------------


def free_variables(f: Formula) -> frozenset[str]:
    if isinstance(f, Eq):
        return frozenset((f.left, f.right))
    if isinstance(f, App1):
        return frozenset((f.arg,))
    if isinstance(f, App2):
        return frozenset((f.left, f.right))
    if isinstance(f, Not):
        return free_variables(f.body)
    if isinstance(f, (And, Or)):
        out: frozenset[str] = frozenset()
        for item in f.items:
            out |= free_variables(item)
        return out
    if isinstance(f, Implies):
        return free_variables(f.left) | free_variables(f.right)
    return free_variables(f.body) - {f.var}


def quantifier_depth(f: Formula) -> int:
    if isinstance(f, (Eq, App1, App2)):
        return 0
    if isinstance(f, Not):
        return quantifier_depth(f.body)
    if isinstance(f, (And, Or)):
        return max((quantifier_depth(i) for i in f.items), default=0)
    if isinstance(f, Implies):
        return max(quantifier_depth(f.left), quantifier_depth(f.right))
    return 1 + quantifier_depth(f.body)


def formula_length(f: Formula) -> int:
    if isinstance(f, (Eq, App1, App2)):
        return 1
    if isinstance(f, Not):
        return 1 + formula_length(f.body)
    if isinstance(f, (And, Or)):
        return 1 + sum(formula_length(i) for i in f.items)
    if isinstance(f, Implies):
        return 1 + formula_length(f.left) + formula_length(f.right)
    return 1 + formula_length(f.body)


def to_prefix(f: Formula) -> str:
    """Plain prefix-notation dump, mainly for debugging and goldens."""
    if isinstance(f, Eq):
        return f"(= {f.left} {f.right})"
    if isinstance(f, App1):
        return f"({f.rel} {f.arg})"
    if isinstance(f, App2):
        return f"({f.rel} {f.left} {f.right})"
    if isinstance(f, Not):
        return f"(not {to_prefix(f.body)})"
    if isinstance(f, And):
        return "(and " + " ".join(to_prefix(i) for i in f.items) + ")"
    if isinstance(f, Or):
        return "(or " + " ".join(to_prefix(i) for i in f.items) + ")"
    if isinstance(f, Implies):
        return f"(implies {to_prefix(f.left)} {to_prefix(f.right)})"
    if isinstance(f, Exists):
        return f"(exists {f.var} {to_prefix(f.body)})"
    return f"(forall {f.var} {to_prefix(f.body)})"


# -- substitution -------------------------------------------------------------

_fresh_counter = itertools.count(1)


def fresh_var(hint: str = "v") -> str:
    return f"{hint}{next(_fresh_counter)}"


def substitute(f: Formula, mapping: Mapping[str, str]) -> Formula:
    """Replace free occurrences, renaming bound variables to avoid capture."""
    if isinstance(f, Eq):
        return Eq(mapping.get(f.left, f.left), mapping.get(f.right, f.right))
    if isinstance(f, App1):
        return App1(f.rel, mapping.get(f.arg, f.arg))
    if isinstance(f, App2):
        return App2(f.rel, mapping.get(f.left, f.left), mapping.get(f.right, f.right))
    if isinstance(f, Not):
        return Not(substitute(f.body, mapping))
    if isinstance(f, And):
        return And(tuple(substitute(i, mapping) for i in f.items))
    if isinstance(f, Or):
        return Or(tuple(substitute(i, mapping) for i in f.items))
    if isinstance(f, Implies):
        return Implies(substitute(f.left, mapping), substitute(f.right, mapping))
    # quantifier: drop shadowed entries, rename when the bound name collides
    inner = {k: v for k, v in mapping.items() if k != f.var}
    if not inner:
        body = f.body
        var = f.var
    elif f.var in inner.values():
        var = fresh_var()
        body = substitute(f.body, {**inner, f.var: var})
    else:
        var = f.var
        body = substitute(f.body, inner)
    return Exists(var, body) if isinstance(f, Exists) else Forall(var, body)


def as_pred(phi: Union[Formula, Pred], designated: str = "x") -> Pred:
    """Normalize a predicate argument: callables pass through, formulas bind
    their designated free variable."""
    if callable(phi) and not isinstance(phi, (Eq, App1, App2, Not, And, Or, Implies, Exists, Forall)):
        return phi
    return lambda v: substitute(phi, {designated: v})


def unary_pred(rel: str) -> Pred:
    return lambda v: App1(rel, v)


# -- structures ---------------------------------------------------------------


class Structure:
    """A finite relational structure: universe, binary A, named unary sets."""

    __slots__ = ("universe", "binary", "unary", "_index", "_rows", "_unary_masks")

    def __init__(
        self,
        universe: Iterable[str],
        binary: Iterable[tuple[str, str]],
        unary: Mapping[str, Iterable[str]] | None = None,
    ):
        self.universe = tuple(universe)
        self._index = {name: i for i, name in enumerate(self.universe)}
        if len(self._index) != len(self.universe):
            raise ValueError("duplicate element in universe")
        rows = [0] * len(self.universe)
        pairs = []
        for a, b in binary:
            ia, ib = self._index[a], self._index[b]
            rows[ia] |= 1 << ib
            pairs.append((a, b))
        self.binary = frozenset(pairs)
        self._rows = rows
        masks: dict[str, int] = {}
        names: dict[str, frozenset[str]] = {}
        for rel, members in (unary or {}).items():
            members = tuple(members)
            mask = 0
            for m in members:
                mask |= 1 << self._index[m]
            masks[rel] = mask
            names[rel] = frozenset(members)
        self.unary = names
        self._unary_masks = masks

    def __repr__(self) -> str:
        return (
            f"Structure({len(self.universe)} elements, {len(self.binary)} pairs, "
            f"unary={sorted(self.unary)})"
        )


def structure_of(
    af: ArgumentationFramework, **unary: ArgumentSet | Iterable[str]
) -> Structure:
    """Structure with universe X and binary A, plus named unary relations."""
    return Structure(af.arguments, af.attacks, {k: tuple(v) for k, v in unary.items()})


def build_structure(instance: ProblemInstance) -> Structure:
    """The model-checking structure for a problem instance."""
    af = instance.framework
    if instance.kind is ProblemKind.SMALL:
        return structure_of(af)
    if instance.kind is ProblemKind.REPAIR:
        return structure_of(af, S=instance.s)
    if instance.kind is ProblemKind.ADJUST:
        return structure_of(af, E0=instance.e0, T=(instance.target,))
    return structure_of(af, E1=instance.e1, E2=instance.e2)


def gaifman_max_degree(st: Structure) -> int:
    """Max number of distinct other elements sharing a binary tuple."""
    n = len(st.universe)
    neigh = [0] * n
    for a, b in st.binary:
        ia, ib = st._index[a], st._index[b]
        if ia != ib:
            neigh[ia] |= 1 << ib
            neigh[ib] |= 1 << ia
    return max((m.bit_count() for m in neigh), default=0)


# -- evaluator ----------------------------------------------------------------


def _compile(f: Formula, slots: dict[str, int], st: Structure, counter: list[int]):
    if isinstance(f, Eq):
        try:
            ia, ib = slots[f.left], slots[f.right]
        except KeyError as e:
            raise UnboundVariable(f"variable {e.args[0]!r} is not bound") from None
        return lambda env: env[ia] == env[ib]
    if isinstance(f, App1):
        try:
            mask = st._unary_masks[f.rel]
        except KeyError:
            raise ValueError(f"structure has no unary relation {f.rel!r}") from None
        try:
            ix = slots[f.arg]
        except KeyError as e:
            raise UnboundVariable(f"variable {e.args[0]!r} is not bound") from None
        return lambda env: bool(mask >> env[ix] & 1)
    if isinstance(f, App2):
        if f.rel != "A":
            raise ValueError(f"structure has no binary relation {f.rel!r}")
        rows = st._rows
        try:
            ia, ib = slots[f.left], slots[f.right]
        except KeyError as e:
            raise UnboundVariable(f"variable {e.args[0]!r} is not bound") from None
        return lambda env: bool(rows[env[ia]] >> env[ib] & 1)
    if isinstance(f, Not):
        sub = _compile(f.body, slots, st, counter)
        return lambda env: not sub(env)
    if isinstance(f, And):
        subs = [_compile(i, slots, st, counter) for i in f.items]
        if len(subs) == 2:
            a, b = subs
            return lambda env: a(env) and b(env)
        return lambda env: all(s(env) for s in subs)
    if isinstance(f, Or):
        subs = [_compile(i, slots, st, counter) for i in f.items]
        if len(subs) == 2:
            a, b = subs
            return lambda env: a(env) or b(env)
        return lambda env: any(s(env) for s in subs)
    if isinstance(f, Implies):
        a = _compile(f.left, slots, st, counter)
        b = _compile(f.right, slots, st, counter)
        return lambda env: (not a(env)) or b(env)
    # quantifiers
    slot = counter[0]
    counter[0] += 1
    body = _compile(f.body, {**slots, f.var: slot}, st, counter)
    rng = range(len(st.universe))
    if isinstance(f, Exists):
        def ex(env):
            for val in rng:
                env[slot] = val
                if body(env):
                    return True
            return False
        return ex

    def fa(env):
        for val in rng:
            env[slot] = val
            if not body(env):
                return False
        return True
    return fa


def evaluate(
    st: Structure, f: Formula, assignment: Mapping[str, str] | None = None
) -> bool:
    """Tarskian truth of f in st under the given free-variable assignment."""
    assignment = assignment or {}
    free = sorted(free_variables(f))
    slots: dict[str, int] = {}
    values: list[int] = []
    for v in free:
        if v not in assignment:
            raise UnboundVariable(f"variable {v!r} is not bound")
        element = assignment[v]
        if element not in st._index:
            raise ValueError(f"element {element!r} is not in the universe")
        slots[v] = len(slots)
        values.append(st._index[element])
    counter = [len(slots)]
    fn = _compile(f, slots, st, counter)
    env = values + [0] * (counter[0] - len(values))
    return fn(env)


# -- semantics transliterations ----------------------------------------------


def set_formula(l: int) -> Formula:
    """Membership in the set named by witness variables x1..xl, free var y."""
    if l < 1:
        raise InvalidArity("set formula needs at least one witness variable")
    return disj(Eq("y", f"x{i}") for i in range(1, l + 1))


def _set_pred(variables: tuple[str, ...]) -> Pred:
    return lambda v: disj(Eq(v, x) for x in variables)


def cf_of(phi: Union[Formula, Pred]) -> Formula:
    p = as_pred(phi)
    x, y = fresh_var(), fresh_var()
    return Forall(
        x, Forall(y, Implies(And((p(x), p(y))), Not(attacks(x, y))))
    )


def adm_of(phi: Union[Formula, Pred]) -> Formula:
    p = as_pred(phi)
    x, y, z = fresh_var(), fresh_var(), fresh_var()
    defended = Forall(
        x,
        Forall(
            z,
            Implies(
                And((p(x), Not(p(z)), attacks(z, x))),
                Exists(y, And((p(y), attacks(y, z)))),
            ),
        ),
    )
    return And((cf_of(p), defended))


def com_of(phi: Union[Formula, Pred]) -> Formula:
    p = as_pred(phi)
    a, x1, x2, z = fresh_var(), fresh_var(), fresh_var(), fresh_var()
    all_attackers_countered = Forall(
        a, Implies(attacks(a, z), Exists(x1, And((p(x1), attacks(x1, a)))))
    )
    no_conflict_with = Forall(
        x2, Implies(p(x2), Not(Or((attacks(x2, z), attacks(z, x2)))))
    )
    closure = Forall(
        z, Implies(And((all_attackers_countered, no_conflict_with)), p(z))
    )
    return And((adm_of(p), closure))


def stb_of(phi: Union[Formula, Pred]) -> Formula:
    p = as_pred(phi)
    z, a = fresh_var(), fresh_var()
    covers = Forall(z, Or((p(z), Exists(a, And((p(a), attacks(a, z)))))))
    return And((cf_of(p), covers))


def sym_diff_of(
    phi1: Union[Formula, Pred], phi2: Union[Formula, Pred]
) -> Formula:
    """Symmetric difference of two predicates, free variable y."""
    return _sym_diff_pred(as_pred(phi1), as_pred(phi2))("y")


def _sym_diff_pred(p1: Pred, p2: Pred) -> Pred:
    return lambda v: Or(
        (And((p1(v), Not(p2(v)))), And((Not(p1(v)), p2(v))))
    )


def at_most(phi: Union[Formula, Pred], k: int) -> Formula:
    """No k+1 pairwise distinct elements all satisfy phi."""
    if k < 0:
        raise InvalidArity("at_most needs k >= 0")
    p = as_pred(phi)
    vs = [fresh_var() for _ in range(k + 1)]
    parts = [
        Not(Eq(vs[i], vs[j])) for i in range(k + 1) for j in range(i + 1, k + 1)
    ]
    parts.extend(p(v) for v in vs)
    body: Formula = conj(parts)
    for v in reversed(vs):
        body = Exists(v, body)
    return Not(body)


_SIGMA_BUILDERS = {
    Semantics.ADMISSIBLE: adm_of,
    Semantics.COMPLETE: com_of,
    Semantics.STABLE: stb_of,
}

FO_SEMANTICS = tuple(_SIGMA_BUILDERS)


def sigma_of(sigma: Semantics) -> Callable[[Union[Formula, Pred]], Formula]:
    try:
        return _SIGMA_BUILDERS[sigma]
    except KeyError:
        raise UnsupportedSemantics(
            f"first-order route supports adm, com, stb; got {sigma.value}"
        ) from None


# -- problem sentences ---------------------------------------------------------


def _witness_vars(count: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, count + 1))


def small_formula(sigma: Semantics, k: int) -> Formula:
    """Some nonempty sigma-extension has at most k members."""
    build = sigma_of(sigma)
    if k < 1:
        raise InvalidArity("small formula needs k >= 1")
    vs = _witness_vars(k)
    body = build(_set_pred(vs))
    for v in reversed(vs):
        body = Exists(v, body)
    return body


def repair_formula(sigma: Semantics, k: int) -> Formula:
    """Verbatim form: some delta of exactly the named variables works.

    Known gaps (kept on purpose; see corrected_repair_formula): the named
    delta variables always denote a nonempty change, and the resulting
    extension is not required to be nonempty.
    """
    build = sigma_of(sigma)
    if k < 1:
        raise InvalidArity("repair formula needs k >= 1")
    vs = _witness_vars(k)
    body = build(_sym_diff_pred(unary_pred("S"), _set_pred(vs)))
    for v in reversed(vs):
        body = Exists(v, body)
    return body


def corrected_repair_formula(sigma: Semantics, k: int) -> Formula:
    """Exact Repair sentence: nonempty extension within distance k, including 0."""
    build = sigma_of(sigma)
    if k < 0:
        raise InvalidArity("corrected repair formula needs k >= 0")
    y = fresh_var()
    disjuncts: list[Formula] = [
        And((build(unary_pred("S")), Exists(y, App1("S", y))))
    ]
    for l in range(1, k + 1):
        vs = _witness_vars(l)
        pred = _sym_diff_pred(unary_pred("S"), _set_pred(vs))
        y2 = fresh_var()
        body: Formula = And((build(pred), Exists(y2, pred(y2))))
        for v in reversed(vs):
            body = Exists(v, body)
        disjuncts.append(body)
    return disj(disjuncts)


def adjust_formula(sigma: Semantics, k: int) -> Formula:
    """Some sigma-extension within distance k of E0 flips a target in T."""
    build = sigma_of(sigma)
    if k < 1:
        raise InvalidArity("adjust formula needs k >= 1")
    vs = ("t",) + _witness_vars(k - 1)
    body: Formula = And((App1("T", "t"), build(_sym_diff_pred(unary_pred("E0"), _set_pred(vs)))))
    for v in reversed(vs):
        body = Exists(v, body)
    return body


def center_formula(sigma: Semantics, k: int) -> Formula:
    """Some sigma-extension lies strictly closer than k to both E1 and E2."""
    build = sigma_of(sigma)
    if k < 2:
        raise InvalidArity("center formula needs k >= 2")
    vs = _witness_vars(k - 1)
    e_pred = _sym_diff_pred(unary_pred("E1"), _set_pred(vs))
    body: Formula = And(
        (build(e_pred), at_most(_sym_diff_pred(e_pred, unary_pred("E2")), k - 1))
    )
    for v in reversed(vs):
        body = Exists(v, body)
    return body
