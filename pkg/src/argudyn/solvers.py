"""Three decision routes for the Small/Repair/Adjust/Center problems.

Delta enumeration is the reference route: it walks candidate change sets in
canonical order and returns the first witness at the smallest distance
(ties broken by cardinality, then lexicographic argument order).  The
branching route handles Repair for adm/com/stb by committing arguments in
or out, one budget unit per commitment.  The first-order route evaluates
the problem sentences over the instance structure.

Adjust and Center accept the empty set as a witness by default; pass
require_nonempty=True to restrict to nonempty witnesses (the reduction
equivalence checks in the gadget tests use that mode).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, product

from .core import (
    ArgumentationFramework,
    ArgumentSet,
    Semantics,
    adm_mask,
    attacked_mask,
    com_mask,
    iter_bits,
    stb_mask,
)
from .enumeration import preferred_mask, semistable_mask
from .errors import NotAnExtension, UnsupportedSemantics
from .firstorder import (
    App1,
    And,
    Exists,
    _compile,
    _set_pred,
    _sym_diff_pred,
    at_most,
    sigma_of,
    structure_of,
    unary_pred,
)
from .instances import ProblemInstance, ProblemKind

ENGINES = ("delta", "branching", "fo")


@dataclass
class SolveStats:
    candidates: int = 0
    nodes: int = 0
    seconds: float = 0.0


@dataclass
class SolveResult:
    answer: bool
    witness: ArgumentSet | None
    stats: SolveStats = field(default_factory=SolveStats)


def sigma_member_mask(
    af: ArgumentationFramework, mask: int, sigma: Semantics, cap: int | None = None
) -> bool:
    """Membership of a set (as mask) in sigma(af)."""
    if sigma is Semantics.ADMISSIBLE:
        return adm_mask(af, mask)
    if sigma is Semantics.COMPLETE:
        return com_mask(af, mask)
    if sigma is Semantics.STABLE:
        return stb_mask(af, mask)
    if sigma is Semantics.PREFERRED:
        return preferred_mask(af, mask, cap)
    return semistable_mask(af, mask, cap)


def _canonical_min(af: ArgumentationFramework, masks: list[int]) -> int:
    return min(masks, key=lambda m: (m.bit_count(), tuple(iter_bits(m))))


def _result(
    af: ArgumentationFramework,
    witness_mask: int | None,
    stats: SolveStats,
    start: float,
) -> SolveResult:
    stats.seconds = time.perf_counter() - start
    if witness_mask is None:
        return SolveResult(False, None, stats)
    return SolveResult(True, ArgumentSet(af, witness_mask), stats)


# -- delta enumeration --------------------------------------------------------


def solve_small(
    af: ArgumentationFramework, sigma: Semantics, k: int, cap: int | None = None
) -> SolveResult:
    """Is there a nonempty sigma-extension with at most k members?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    start = time.perf_counter()
    stats = SolveStats()
    for size in range(1, min(k, af.n) + 1):
        for combo in combinations(range(af.n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            stats.candidates += 1
            if sigma_member_mask(af, mask, sigma, cap):
                return _result(af, mask, stats, start)
    return _result(af, None, stats, start)


def solve_repair(
    af: ArgumentationFramework,
    s: ArgumentSet,
    sigma: Semantics,
    k: int,
    cap: int | None = None,
) -> SolveResult:
    """Is there a nonempty sigma-extension within distance k of S?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if s.af != af:
        raise ValueError("start set does not belong to the framework")
    start = time.perf_counter()
    stats = SolveStats()
    base = s.mask
    for d in range(0, min(k, af.n) + 1):
        hits: list[int] = []
        for combo in combinations(range(af.n), d):
            delta = 0
            for i in combo:
                delta |= 1 << i
            stats.candidates += 1
            e = base ^ delta
            if e == 0:
                continue
            if sigma_member_mask(af, e, sigma, cap):
                hits.append(e)
        if hits:
            return _result(af, _canonical_min(af, hits), stats, start)
    return _result(af, None, stats, start)


def _validate_extension(
    af: ArgumentationFramework,
    e: ArgumentSet,
    sigma: Semantics,
    cap: int | None,
    label: str,
) -> None:
    if not sigma_member_mask(af, e.mask, sigma, cap):
        raise NotAnExtension(f"{label} is not a {sigma.value}-extension")


def solve_adjust(
    af: ArgumentationFramework,
    e0: ArgumentSet,
    target: str,
    sigma: Semantics,
    k: int,
    cap: int | None = None,
    require_nonempty: bool = False,
) -> SolveResult:
    """Is there a sigma-extension within distance k of E0 that flips target?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if e0.af != af:
        raise ValueError("start extension does not belong to the framework")
    t = af.index_of(target)
    _validate_extension(af, e0, sigma, cap, "E0")
    start = time.perf_counter()
    stats = SolveStats()
    base = e0.mask
    tbit = 1 << t
    others = [i for i in range(af.n) if i != t]
    for d in range(1, min(k, af.n) + 1):
        hits: list[int] = []
        for combo in combinations(others, d - 1):
            delta = tbit
            for i in combo:
                delta |= 1 << i
            stats.candidates += 1
            e = base ^ delta
            if require_nonempty and e == 0:
                continue
            if sigma_member_mask(af, e, sigma, cap):
                hits.append(e)
        if hits:
            return _result(af, _canonical_min(af, hits), stats, start)
    return _result(af, None, stats, start)


def solve_center(
    af: ArgumentationFramework,
    e1: ArgumentSet,
    e2: ArgumentSet,
    sigma: Semantics,
    cap: int | None = None,
    require_nonempty: bool = False,
) -> SolveResult:
    """Is there a sigma-extension strictly closer than dist(E1,E2) to both?

    The change-set parameter is k = dist(E1, E2).  Candidates are deltas
    around E1; a delta with a members inside E1^E2 and b outside satisfies
    the E2-side bound exactly when b <= a-1, so only those are walked.
    """
    if e1.af != af or e2.af != af:
        raise ValueError("endpoint sets do not belong to the framework")
    _validate_extension(af, e1, sigma, cap, "E1")
    _validate_extension(af, e2, sigma, cap, "E2")
    start = time.perf_counter()
    stats = SolveStats()
    k = (e1.mask ^ e2.mask).bit_count()
    if k == 0:
        return _result(af, None, stats, start)
    w = [i for i in range(af.n) if (e1.mask ^ e2.mask) >> i & 1]
    rest = [i for i in range(af.n) if not (e1.mask ^ e2.mask) >> i & 1]
    base = e1.mask
    for d1 in range(1, k):
        hits: list[int] = []
        a_min = (d1 + 2) // 2  # need b = d1-a <= a-1
        for a in range(a_min, min(d1, len(w)) + 1):
            b = d1 - a
            if b > len(rest):
                continue
            for inside in combinations(w, a):
                dmask = 0
                for i in inside:
                    dmask |= 1 << i
                for outside in combinations(rest, b):
                    delta = dmask
                    for i in outside:
                        delta |= 1 << i
                    stats.candidates += 1
                    e = base ^ delta
                    if require_nonempty and e == 0:
                        continue
                    if sigma_member_mask(af, e, sigma, cap):
                        hits.append(e)
        if hits:
            return _result(af, _canonical_min(af, hits), stats, start)
    return _result(af, None, stats, start)


# -- branching route for Repair ------------------------------------------------


def solve_repair_branching(
    af: ArgumentationFramework,
    s: ArgumentSet,
    sigma: Semantics,
    k: int,
) -> SolveResult:
    """Repair by depth-first commitment branching; adm/com/stb only.

    Every branch commits one argument against its current side, costing one
    unit of the distance budget, so the tree depth is at most k and the
    width is bounded by the attack degrees (plus one linear emptiness
    branch when the candidate goes empty).
    """
    if sigma not in (Semantics.ADMISSIBLE, Semantics.COMPLETE, Semantics.STABLE):
        raise UnsupportedSemantics(
            f"branching route supports adm, com, stb; got {sigma.value}"
        )
    if k < 0:
        raise ValueError("k must be nonnegative")
    if s.af != af:
        raise ValueError("start set does not belong to the framework")
    start = time.perf_counter()
    stats = SolveStats()
    base = s.mask
    full = af.full_mask
    attackers = af._attackers
    targets = af._targets
    pairs = [
        (af.index_of(a), af.index_of(b)) for a, b in af.sorted_attacks()
    ]

    def checker(mask: int) -> bool:
        if sigma is Semantics.ADMISSIBLE:
            return adm_mask(af, mask)
        if sigma is Semantics.COMPLETE:
            return com_mask(af, mask)
        return stb_mask(af, mask)

    def search(cin: int, cout: int, budget: int) -> int | None:
        stats.nodes += 1
        e = cin | (base & ~cout)

        # 1: internal conflict
        for i, j in pairs:
            if e >> i & 1 and e >> j & 1:
                for x in ((i,) if i == j else (i, j)):
                    if cin >> x & 1 or budget == 0:
                        continue
                    r = search(cin, cout | 1 << x, budget - 1)
                    if r is not None:
                        return r
                return None

        # 2: undefended member
        attacked = attacked_mask(af, e)
        for i in iter_bits(e):
            hole = attackers[i] & ~attacked
            if not hole:
                continue
            z = (hole & -hole).bit_length() - 1
            if budget > 0:
                if not cin >> i & 1:
                    r = search(cin, cout | 1 << i, budget - 1)
                    if r is not None:
                        return r
                for wbit in iter_bits(attackers[z]):
                    b = 1 << wbit
                    if cout & b or targets[wbit] & b:
                        continue
                    r = search(cin | b, cout, budget - 1)
                    if r is not None:
                        return r
            return None

        # 3: semantics-specific outsiders
        if sigma is Semantics.STABLE:
            uncovered = full & ~(e | attacked)
            if uncovered:
                z = (uncovered & -uncovered).bit_length() - 1
                if budget > 0:
                    for wbit in iter_bits(attackers[z] | 1 << z):
                        b = 1 << wbit
                        if cout & b or targets[wbit] & b or e & b:
                            continue
                        r = search(cin | b, cout, budget - 1)
                        if r is not None:
                            return r
                return None
        elif sigma is Semantics.COMPLETE:
            for z in iter_bits(full & ~e):
                if attackers[z] & ~attacked:
                    continue
                # z is a defended outsider: take it in, or drop a defender
                if budget > 0:
                    zb = 1 << z
                    if not (cout & zb or targets[z] & zb):
                        r = search(cin | zb, cout, budget - 1)
                        if r is not None:
                            return r
                    defenders = 0
                    for a in iter_bits(attackers[z]):
                        defenders |= e & attackers[a]
                    for d in iter_bits(defenders & ~cin):
                        r = search(cin, cout | 1 << d, budget - 1)
                        if r is not None:
                            return r
                return None

        # 4: nonemptiness
        if e == 0:
            if budget > 0:
                for z in range(af.n):
                    b = 1 << z
                    if cout & b or targets[z] & b:
                        continue
                    r = search(b | cin, cout, budget - 1)
                    if r is not None:
                        return r
            return None

        return e if checker(e) else None

    witness = search(0, 0, k)
    return _result(af, witness, stats, start)


# -- first-order route ----------------------------------------------------------


def _fo_gate(sigma: Semantics) -> None:
    sigma_of(sigma)  # raises UnsupportedSemantics for prf/sem


def _run_product(st, inner, free_vars, n, stats):
    """Compile inner over the named free variables and scan assignments."""
    slots = {v: i for i, v in enumerate(free_vars)}
    counter = [len(free_vars)]
    fn = _compile(inner, slots, st, counter)
    env = [0] * counter[0]
    width = len(free_vars)
    for vals in product(range(n), repeat=width):
        env[:width] = vals
        stats.candidates += 1
        if fn(env):
            return vals
    return None


def fo_solve_small(
    af: ArgumentationFramework, sigma: Semantics, k: int
) -> SolveResult:
    _fo_gate(sigma)
    start = time.perf_counter()
    stats = SolveStats()
    if k < 1 or af.n == 0:
        return _result(af, None, stats, start)
    kk = min(k, af.n)
    vs = tuple(f"x{i}" for i in range(1, kk + 1))
    inner = sigma_of(sigma)(_set_pred(vs))
    st = structure_of(af)
    vals = _run_product(st, inner, vs, af.n, stats)
    if vals is None:
        return _result(af, None, stats, start)
    mask = 0
    for v in vals:
        mask |= 1 << v
    return _result(af, mask, stats, start)


def fo_solve_repair(
    af: ArgumentationFramework, s: ArgumentSet, sigma: Semantics, k: int
) -> SolveResult:
    """Repair via the corrected sentence: distance-l disjuncts, l = 0..k."""
    _fo_gate(sigma)
    if s.af != af:
        raise ValueError("start set does not belong to the framework")
    start = time.perf_counter()
    stats = SolveStats()
    st = structure_of(af, S=s)
    build = sigma_of(sigma)
    if af.n == 0:
        return _result(af, None, stats, start)
    # l = 0
    stats.candidates += 1
    inner0 = And((build(unary_pred("S")), Exists("y0", App1("S", "y0"))))
    if _eval_closed(st, inner0):
        return _result(af, s.mask, stats, start)
    for l in range(1, min(k, af.n) + 1):
        vs = tuple(f"x{i}" for i in range(1, l + 1))
        pred = _sym_diff_pred(unary_pred("S"), _set_pred(vs))
        inner = And((build(pred), Exists("y0", pred("y0"))))
        vals = _run_product(st, inner, vs, af.n, stats)
        if vals is not None:
            delta = 0
            for v in vals:
                delta |= 1 << v
            return _result(af, s.mask ^ delta, stats, start)
    return _result(af, None, stats, start)


def _eval_closed(st, f) -> bool:
    counter = [0]
    fn = _compile(f, {}, st, counter)
    return fn([0] * max(counter[0], 1))


def fo_solve_adjust(
    af: ArgumentationFramework,
    e0: ArgumentSet,
    target: str,
    sigma: Semantics,
    k: int,
    cap: int | None = None,
) -> SolveResult:
    _fo_gate(sigma)
    if e0.af != af:
        raise ValueError("start extension does not belong to the framework")
    t = af.index_of(target)
    _validate_extension(af, e0, sigma, cap, "E0")
    start = time.perf_counter()
    stats = SolveStats()
    if k < 1:
        return _result(af, None, stats, start)
    kk = min(k, af.n)
    vs = ("t",) + tuple(f"x{i}" for i in range(1, kk))
    inner = And(
        (
            App1("T", "t"),
            sigma_of(sigma)(_sym_diff_pred(unary_pred("E0"), _set_pred(vs))),
        )
    )
    st = structure_of(af, E0=e0, T=(target,))
    vals = _run_product(st, inner, vs, af.n, stats)
    if vals is None:
        return _result(af, None, stats, start)
    delta = 0
    for v in vals:
        delta |= 1 << v
    return _result(af, e0.mask ^ delta, stats, start)


def fo_solve_center(
    af: ArgumentationFramework,
    e1: ArgumentSet,
    e2: ArgumentSet,
    sigma: Semantics,
    cap: int | None = None,
) -> SolveResult:
    _fo_gate(sigma)
    if e1.af != af or e2.af != af:
        raise ValueError("endpoint sets do not belong to the framework")
    _validate_extension(af, e1, sigma, cap, "E1")
    _validate_extension(af, e2, sigma, cap, "E2")
    start = time.perf_counter()
    stats = SolveStats()
    k = (e1.mask ^ e2.mask).bit_count()
    if k < 2:
        return _result(af, None, stats, start)
    kk = min(k - 1, af.n)
    vs = tuple(f"x{i}" for i in range(1, kk + 1))
    e_pred = _sym_diff_pred(unary_pred("E1"), _set_pred(vs))
    inner = And(
        (
            sigma_of(sigma)(e_pred),
            at_most(_sym_diff_pred(e_pred, unary_pred("E2")), k - 1),
        )
    )
    st = structure_of(af, E1=e1, E2=e2)
    vals = _run_product(st, inner, vs, af.n, stats)
    if vals is None:
        return _result(af, None, stats, start)
    delta = 0
    for v in vals:
        delta |= 1 << v
    return _result(af, e1.mask ^ delta, stats, start)


# -- dispatcher ------------------------------------------------------------------


def solve_instance(
    instance: ProblemInstance,
    engine: str = "delta",
    cap: int | None = None,
    require_nonempty: bool = False,
) -> SolveResult:
    """Route an instance to the requested engine."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    af = instance.framework
    sigma = instance.semantics
    kind = instance.kind
    if engine == "branching":
        if kind is not ProblemKind.REPAIR:
            raise ValueError("branching engine handles only repair")
        return solve_repair_branching(af, instance.s, sigma, instance.k)
    if engine == "fo":
        _fo_gate(sigma)
        if kind is ProblemKind.SMALL:
            return fo_solve_small(af, sigma, instance.k)
        if kind is ProblemKind.REPAIR:
            return fo_solve_repair(af, instance.s, sigma, instance.k)
        if kind is ProblemKind.ADJUST:
            return fo_solve_adjust(
                af, instance.e0, instance.target, sigma, instance.k, cap
            )
        return fo_solve_center(af, instance.e1, instance.e2, sigma, cap)
    if kind is ProblemKind.SMALL:
        return solve_small(af, sigma, instance.k, cap)
    if kind is ProblemKind.REPAIR:
        return solve_repair(af, instance.s, sigma, instance.k, cap)
    if kind is ProblemKind.ADJUST:
        return solve_adjust(
            af,
            instance.e0,
            instance.target,
            sigma,
            instance.k,
            cap,
            require_nonempty,
        )
    return solve_center(
        af, instance.e1, instance.e2, sigma, cap, require_nonempty
    )
