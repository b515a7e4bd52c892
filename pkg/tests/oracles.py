"""Definition-level reference implementations used to cross-check the
package. Everything here works on plain frozensets, tuples, and
itertools; nothing imports the package under test.

Conventions: a framework is (arguments, attacks) with arguments an
iterable of names and attacks a set of (attacker, target) pairs.
"""

from itertools import chain, combinations, product


def powerset(items):
    items = list(items)
    return (
        frozenset(c)
        for c in chain.from_iterable(
            combinations(items, r) for r in range(len(items) + 1)
        )
    )


def oracle_conflict_free(attacks, e):
    return not any((a, b) in attacks for a in e for b in e)


def oracle_defends(attacks, e, x):
    attackers = {a for (a, t) in attacks if t == x}
    return all(any((z, y) in attacks for z in e) for y in attackers)


def oracle_admissible(attacks, e):
    return oracle_conflict_free(attacks, e) and all(
        oracle_defends(attacks, e, x) for x in e
    )


def oracle_complete(args, attacks, e):
    if not oracle_admissible(attacks, e):
        return False
    return all(x in e for x in args if oracle_defends(attacks, e, x))


def oracle_range(attacks, e):
    return frozenset(e) | {t for (a, t) in attacks if a in e}


def oracle_stable(args, attacks, e):
    return oracle_conflict_free(attacks, e) and oracle_range(attacks, e) == frozenset(
        args
    )


def oracle_extensions(args, attacks, sigma):
    """All sigma-extensions as a set of frozensets; sigma is one of
    adm/com/prf/sem/stb."""
    args = list(args)
    attacks = set(attacks)
    adm = [e for e in powerset(args) if oracle_admissible(attacks, e)]
    if sigma == "adm":
        return set(adm)
    if sigma == "com":
        return {e for e in adm if oracle_complete(args, attacks, e)}
    if sigma == "stb":
        return {e for e in adm if oracle_stable(args, attacks, e)}
    if sigma == "prf":
        return {e for e in adm if not any(e < other for other in adm)}
    if sigma == "sem":
        ranges = {e: oracle_range(attacks, e) for e in adm}
        return {
            e
            for e in adm
            if not any(ranges[e] < ranges[other] for other in adm)
        }
    raise ValueError(f"unknown semantics {sigma!r}")


def oracle_distance(e1, e2):
    return len(frozenset(e1) ^ frozenset(e2))


def oracle_small(args, attacks, sigma, k):
    """Witness list for: nonempty sigma-extension of size <= k."""
    return sorted(
        (e for e in oracle_extensions(args, attacks, sigma) if 0 < len(e) <= k),
        key=lambda e: (len(e), sorted(e)),
    )


def oracle_repair(args, attacks, sigma, s, k):
    """Witness list for: nonempty sigma-extension within distance k of s."""
    return sorted(
        (
            e
            for e in oracle_extensions(args, attacks, sigma)
            if e and oracle_distance(e, s) <= k
        ),
        key=lambda e: (oracle_distance(e, s), len(e), sorted(e)),
    )


def oracle_adjust(args, attacks, sigma, e0, target, k, require_nonempty=False):
    """Witness list for: sigma-extension within distance k of e0 that
    toggles target's membership."""
    return sorted(
        (
            e
            for e in oracle_extensions(args, attacks, sigma)
            if oracle_distance(e, e0) <= k
            and target in (frozenset(e0) ^ e)
            and (e or not require_nonempty)
        ),
        key=lambda e: (oracle_distance(e, e0), len(e), sorted(e)),
    )


def oracle_center(args, attacks, sigma, e1, e2, require_nonempty=False):
    """Witness list for: sigma-extension strictly closer to each endpoint
    than the endpoints are to each other."""
    d = oracle_distance(e1, e2)
    return sorted(
        (
            e
            for e in oracle_extensions(args, attacks, sigma)
            if oracle_distance(e, e1) < d
            and oracle_distance(e, e2) < d
            and (e or not require_nonempty)
        ),
        key=lambda e: (len(e), sorted(e)),
    )


def oracle_max_degree(args, attacks):
    """Max count of distinct other endpoints adjacent to an argument,
    attack direction ignored, self-attacks excluded."""
    best = 0
    for x in args:
        neighbors = {
            (b if a == x else a) for (a, b) in attacks if x in (a, b)
        } - {x}
        best = max(best, len(neighbors))
    return best


def brute_multicolored_clique(parts, edges):
    """True iff one vertex per part can be chosen pairwise adjacent;
    edges is a set of frozenset pairs."""
    edges = set(edges)
    for combo in product(*parts):
        if all(
            frozenset((u, v)) in edges
            for u, v in combinations(combo, 2)
        ):
            return True
    return False


def sat_table(n, clauses):
    """Truth-table satisfiability; clauses are iterables of signed ints."""
    clauses = [tuple(c) for c in clauses]
    for bits in range(1 << n):
        assignment = {i + 1: bool(bits >> i & 1) for i in range(n)}
        if all(
            any(assignment[abs(l)] == (l > 0) for l in clause)
            for clause in clauses
        ):
            return True
    return False
