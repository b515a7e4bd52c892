"""Instance generators that translate combinatorial questions into the
four dynamic-extension problems, plus the brute-force oracles used to
cross-check them end to end.

Two source objects are supported: vertex-partitioned graphs (clique
questions become small-extension questions) and bounded-occurrence CNF
formulas (unsatisfiability becomes a small/adjust/center question on a
framework whose arguments all keep degree at most 5).  Two wrappers
lift any small-extension question to an adjust or center question.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass

from .core import ArgumentationFramework, Semantics, distance, max_degree
from .errors import ArgudynError, CapExceeded, NotThreeCnfTwo, OddK, UnsupportedSemantics
from .instances import (
    ProblemInstance,
    adjust_instance,
    center_instance,
    small_instance,
)

SAT_ORACLE_CAP = 20
CLIQUE_ORACLE_CAP = 1_000_000

_MAXIMALITY = (Semantics.PREFERRED, Semantics.SEMI_STABLE)


@dataclass(frozen=True)
class KPartiteGraph:
    """Undirected graph with a vertex partition and edges only across parts."""

    parts: tuple[tuple[str, ...], ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self) -> None:
        owner: dict[str, int] = {}
        for i, part in enumerate(self.parts):
            for v in part:
                if v in owner:
                    raise ValueError(f"vertex {v!r} appears in more than one part")
                owner[v] = i
        for edge in self.edges:
            if len(edge) != 2:
                raise ValueError("every edge must join two distinct vertices")
            u, v = sorted(edge)
            if u not in owner or v not in owner:
                raise ValueError(f"edge ({u},{v}) uses an unknown vertex")
            if owner[u] == owner[v]:
                raise ValueError(f"edge ({u},{v}) stays inside one part")

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(v for part in self.parts for v in part)

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def canonical_text(self) -> str:
        parts = ";".join(",".join(part) for part in self.parts)
        edges = ";".join(sorted(",".join(sorted(e)) for e in self.edges))
        return f"parts:{parts}|edges:{edges}"


def kpartite(parts, edges) -> KPartiteGraph:
    """Build a KPartiteGraph from plain iterables."""
    return KPartiteGraph(
        tuple(tuple(p) for p in parts),
        frozenset(frozenset(e) for e in edges),
    )


@dataclass(frozen=True)
class ThreeCnfTwoFormula:
    """CNF with at most 3 literals per clause and each literal in at most
    2 clauses.  Literals are nonzero ints: i is variable i, -i its negation.
    """

    n: int
    clauses: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise NotThreeCnfTwo("need at least one variable")
        if not self.clauses:
            raise NotThreeCnfTwo("need at least one clause")
        counts: dict[int, int] = {}
        for idx, clause in enumerate(self.clauses, start=1):
            if len(clause) > 3:
                raise NotThreeCnfTwo(f"clause {idx} has more than 3 literals")
            for lit in clause:
                if not isinstance(lit, int) or lit == 0 or abs(lit) > self.n:
                    raise NotThreeCnfTwo(f"clause {idx} has invalid literal {lit!r}")
                counts[lit] = counts.get(lit, 0) + 1
                if counts[lit] > 2:
                    raise NotThreeCnfTwo(
                        f"literal {lit} occurs in more than 2 clauses"
                    )

    @property
    def m(self) -> int:
        return len(self.clauses)

    def canonical_text(self) -> str:
        body = ";".join(
            ",".join(str(l) for l in sorted(clause)) for clause in self.clauses
        )
        return f"n={self.n}|{body}"


def cnf(n: int, clauses) -> ThreeCnfTwoFormula:
    """Build a ThreeCnfTwoFormula from plain iterables of int literals."""
    return ThreeCnfTwoFormula(n, tuple(frozenset(c) for c in clauses))


@dataclass(frozen=True)
class GadgetOutput:
    """A generated problem instance plus construction bookkeeping.

    name_map sends construction roles to actual argument names; roles keep
    their default spelling unless a base framework already used the name.
    provenance is JSON-ready: generator id, digest of the source object,
    numeric parameters, and per-generator extras.
    """

    instance: ProblemInstance
    provenance: dict[str, object]
    name_map: dict[str, str]


def _output(
    instance: ProblemInstance,
    provenance: dict[str, object],
    name_map: dict[str, str],
) -> GadgetOutput:
    for name in name_map.values():
        instance.framework.index_of(name)
    return GadgetOutput(instance, provenance, name_map)


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def _af_text(af: ArgumentationFramework) -> str:
    args = ",".join(af.arguments)
    attacks = ";".join(f"{a}>{b}" for a, b in af.sorted_attacks())
    return f"{args}|{attacks}"


def _fresh(taken: set[str], desired: str) -> str:
    name = desired
    suffix = 2
    while name in taken:
        name = f"{desired}_{suffix}"
        suffix += 1
    taken.add(name)
    return name


# -- graph side ------------------------------------------------------------


def even_k_duplicate(g: KPartiteGraph) -> KPartiteGraph:
    """Double a partitioned graph without changing its clique answer.

    Output: two renamed copies (vertex v becomes v_1 and v_2) plus every
    cross-copy edge; a multicolored clique over the 2k parts exists
    exactly when the source has one over its k parts.
    """

    def ren(v: str, copy: int) -> str:
        return f"{v}_{copy}"

    parts = tuple(
        tuple(ren(v, c) for v in part) for c in (1, 2) for part in g.parts
    )
    edges: set[frozenset[str]] = set()
    for edge in g.edges:
        u, v = tuple(edge)
        for c in (1, 2):
            edges.add(frozenset((ren(u, c), ren(v, c))))
    for u in g.vertices:
        for v in g.vertices:
            edges.add(frozenset((ren(u, 1), ren(v, 2))))
    return KPartiteGraph(parts, frozenset(edges))


def has_multicolored_clique(
    g: KPartiteGraph, cap: int = CLIQUE_ORACLE_CAP
) -> bool:
    """Brute-force check for a clique with one vertex from every part."""
    space = 1
    for part in g.parts:
        space *= len(part)
        if space > cap:
            raise CapExceeded(space, cap)
    if space == 0:
        return False
    for combo in itertools.product(*g.parts):
        if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
            return True
    return False


def gen_mcq_small(
    g: KPartiteGraph, sigma: Semantics | str = Semantics.ADMISSIBLE
) -> GadgetOutput:
    """Encode the multicolored-clique question on g as a small-extension
    question with bound k = part count.

    Arguments: one y_<v> per vertex plus helpers z_<v>_<j> for every part
    index j other than v's own.  Per part i the attacks are:
      - all mutual attacks inside {y_<v> : v in part i};
      - every helper attacks itself;
      - z_<v>_<j> attacks y_<v>;
      - y_<v> attacks z_<u>_<j> for every other vertex u of part i;
      - per edge {u,v} with u in part i, v in part j: y_<u> attacks
        z_<v>_<i> and y_<v> attacks z_<u>_<j>.
    A size-k extension exists, under any of the five semantics, exactly
    when the graph has a multicolored k-clique.
    """
    sigma = Semantics.parse(sigma)
    if g.k < 2:
        raise ValueError("need at least 2 parts")
    k = g.k
    part_of = {v: i for i, part in enumerate(g.parts, start=1) for v in part}
    y = {v: f"y_{v}" for v in g.vertices}
    z: dict[tuple[str, int], str] = {}
    args = [y[v] for v in g.vertices]
    for i, part in enumerate(g.parts, start=1):
        for v in part:
            for j in range(1, k + 1):
                if j != i:
                    z[(v, j)] = f"z_{v}_{j}"
                    args.append(z[(v, j)])
    attacks: list[tuple[str, str]] = []
    for i, part in enumerate(g.parts, start=1):
        for v in part:
            for u in part:
                if u != v:
                    attacks.append((y[v], y[u]))
            for j in range(1, k + 1):
                if j == i:
                    continue
                attacks.append((z[(v, j)], z[(v, j)]))
                attacks.append((z[(v, j)], y[v]))
                for u in part:
                    if u != v:
                        attacks.append((y[v], z[(u, j)]))
    for edge in g.edges:
        u, v = tuple(edge)
        attacks.append((y[u], z[(v, part_of[u])]))
        attacks.append((y[v], z[(u, part_of[v])]))
    af = ArgumentationFramework(args, attacks)
    provenance = {
        "generator": "mcq-small",
        "source_digest": _digest(g.canonical_text()),
        "parameters": {
            "k": k,
            "n_vertices": len(g.vertices),
            "n_edges": len(g.edges),
        },
    }
    return _output(
        small_instance(af, sigma, k), provenance, {name: name for name in args}
    )


# -- wrappers over an arbitrary small-extension question --------------------


def gen_adjust_from_small(
    af: ArgumentationFramework,
    k: int,
    sigma: Semantics | str = Semantics.ADMISSIBLE,
) -> GadgetOutput:
    """Wrap a small-extension question (af, k) as a target-flip question.

    One fresh argument t mutually attacks every existing argument, making
    {t} an extension under each of the five semantics; the instance asks
    to flip t away within distance k+1.  The answers coincide verbatim
    for prf and stb, under the nonempty-witness reading for adm and com,
    and can drift for sem when the base has no stable extension (the
    hub makes {t} stable, which collapses sem to stb on the output).
    """
    sigma = Semantics.parse(sigma)
    if k < 0:
        raise ValueError("k must be nonnegative")
    taken = set(af.arguments)
    t = _fresh(taken, "t")
    attacks = list(af.sorted_attacks())
    for x in af.arguments:
        attacks.append((t, x))
        attacks.append((x, t))
    af2 = ArgumentationFramework(af.arguments + (t,), attacks)
    instance = adjust_instance(af2, af2.set_of([t]), t, sigma, k + 1)
    provenance = {
        "generator": "adjust-from-small",
        "source_digest": _digest(_af_text(af)),
        "parameters": {"k": k, "adjust_k": k + 1, "n_arguments": af.n},
    }
    return _output(instance, provenance, {"t": t})


def gen_center_from_small(
    af: ArgumentationFramework,
    k: int,
    sigma: Semantics | str = Semantics.ADMISSIBLE,
) -> GadgetOutput:
    """Wrap a small-extension question (af, k), k even, as a centering
    question between two antipodal extensions at distance 2k+2.

    Added material: mutually attacking hubs t and tp that also attack all
    base arguments, toggle rows w_i / wp_i (each pair mutual, w_i attacks
    t, wp_i attacks tp), and self-attacking anchors z_i (attack the i-th
    toggle pair, attacked by every base argument) and zp_i (attacked by
    the i-th toggle pair, attack every base argument).  Endpoints:
    E1 = {t} plus all wp_i, E2 = {tp} plus all w_i; both are extensions
    under each of the five semantics.  The same equivalence caveats as
    gen_adjust_from_small apply for adm, com, and sem.
    """
    sigma = Semantics.parse(sigma)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k % 2 == 1:
        raise OddK(
            f"k must be even, got {k}; double the source question first"
        )
    taken = set(af.arguments)
    t = _fresh(taken, "t")
    tp = _fresh(taken, "tp")
    w = [_fresh(taken, f"w_{i}") for i in range(1, k + 1)]
    wp = [_fresh(taken, f"wp_{i}") for i in range(1, k + 1)]
    z = [_fresh(taken, f"z_{i}") for i in range(1, k + 1)]
    zp = [_fresh(taken, f"zp_{i}") for i in range(1, k + 1)]
    attacks = list(af.sorted_attacks())
    attacks += [(t, tp), (tp, t)]
    for x in af.arguments:
        attacks += [(t, x), (tp, x)]
    for i in range(k):
        attacks += [(t, z[i]), (t, zp[i]), (tp, z[i]), (tp, zp[i])]
        attacks += [(w[i], t), (w[i], wp[i]), (wp[i], tp), (wp[i], w[i])]
        attacks += [(z[i], z[i]), (zp[i], zp[i])]
        attacks += [(z[i], w[i]), (z[i], wp[i])]
        attacks += [(w[i], zp[i]), (wp[i], zp[i])]
        for x in af.arguments:
            attacks += [(x, z[i]), (zp[i], x)]
    af2 = ArgumentationFramework(
        af.arguments + (t, tp, *w, *wp, *z, *zp), attacks
    )
    e1 = af2.set_of([t, *wp])
    e2 = af2.set_of([tp, *w])
    if distance(e1, e2) != 2 * k + 2:
        raise ArgudynError("endpoint distance drifted from 2k+2")
    instance = center_instance(af2, e1, e2, sigma)
    provenance = {
        "generator": "center-from-small",
        "source_digest": _digest(_af_text(af)),
        "parameters": {"k": k, "threshold": 2 * k + 1, "n_arguments": af.n},
        "forward_witness_scaffold": w[: k // 2] + wp[k // 2 :],
    }
    name_map = {"t": t, "tp": tp}
    for i in range(k):
        name_map[f"w_{i + 1}"] = w[i]
        name_map[f"wp_{i + 1}"] = wp[i]
        name_map[f"z_{i + 1}"] = z[i]
        name_map[f"zp_{i + 1}"] = zp[i]
    return _output(instance, provenance, name_map)


# -- formula side ------------------------------------------------------------


def _bracket_tree(
    leaves: int,
) -> tuple[int, list[int], list[tuple[int, int]], int]:
    """Binary tree with the given leaf count; every internal node has two
    children, splitting ceil(i/2) leaves to the left.  Returns (root id,
    leaf ids left to right, parent->child edges, node count).
    """
    counter = itertools.count()
    edges: list[tuple[int, int]] = []
    leaf_ids: list[int] = []

    def build(i: int) -> int:
        if i == 1:
            node = next(counter)
            leaf_ids.append(node)
            return node
        left = build((i + 1) // 2)
        right = build(i // 2)
        node = next(counter)
        edges.append((node, left))
        edges.append((node, right))
        return node

    root = build(leaves)
    return root, leaf_ids, edges, next(counter)


def _attach_funnel_tree(
    args: list[str],
    attacks: list[tuple[str, str]],
    leaf_count: int,
    hub: str,
    prefix: str,
) -> list[str]:
    """Attach a tree that funnels attacks into hub: every tree edge is
    subdivided, attacks run from the leaves toward the hub, and only the
    subdividing nodes self-attack.  Returns leaf names in order (the hub
    itself when leaf_count is 1)."""
    root, leaf_ids, edges, count = _bracket_tree(leaf_count)
    name = {
        node: (hub if node == root else f"{prefix}_n{node}")
        for node in range(count)
    }
    for node in range(count):
        if node != root:
            args.append(name[node])
    for idx, (parent, child) in enumerate(edges):
        s = f"{prefix}_s{idx}"
        args.append(s)
        attacks += [(name[child], s), (s, name[parent]), (s, s)]
    return [name[leaf] for leaf in leaf_ids]


def _attach_fanout_tree(
    args: list[str],
    attacks: list[tuple[str, str]],
    leaf_count: int,
    hub: str,
    prefix: str,
) -> list[str]:
    """Attach a tree that fans attacks out of hub: every tree edge is
    subdivided, attacks run from the hub toward the leaves, and every
    node of the unsubdivided tree self-attacks (the subdividing nodes do
    not).  Returns leaf names in order."""
    root, leaf_ids, edges, count = _bracket_tree(leaf_count)
    name = {
        node: (hub if node == root else f"{prefix}_n{node}")
        for node in range(count)
    }
    for node in range(count):
        if node != root:
            args.append(name[node])
        attacks.append((name[node], name[node]))
    for idx, (parent, child) in enumerate(edges):
        s = f"{prefix}_s{idx}"
        args.append(s)
        attacks += [(name[parent], s), (s, name[child])]
    return [name[leaf] for leaf in leaf_ids]


def _cnf_base(
    formula: ThreeCnfTwoFormula, include_e: bool
) -> tuple[list[str], list[tuple[str, str]], dict[str, str]]:
    """Shared frame for the three formula generators: hub phi gathers the
    clause attacks through a funnel tree, hub nphi spreads its attacks on
    the literal arguments through a fan-out tree, and every argument ends
    up with degree at most 5.  include_e adds the isolated probe e.

    Argument count is 5m + 10n - 6 without the probe.
    """
    n, m = formula.n, formula.m
    cs = [f"c_{j}" for j in range(1, m + 1)]
    xs = [f"x_{i}" for i in range(1, n + 1)]
    nxs = [f"nx_{i}" for i in range(1, n + 1)]
    args = ["phi", "nphi", *cs]
    for i in range(n):
        args += [xs[i], nxs[i]]
    attacks: list[tuple[str, str]] = [("nphi", "nphi"), ("phi", "nphi")]
    for j, clause in enumerate(formula.clauses):
        attacks.append((cs[j], cs[j]))
        for lit in sorted(clause):
            side = xs[lit - 1] if lit > 0 else nxs[-lit - 1]
            attacks.append((side, cs[j]))
    for i in range(n):
        attacks += [(xs[i], nxs[i]), (nxs[i], xs[i])]
    clause_leaves = _attach_funnel_tree(args, attacks, m, "phi", "bphi")
    for j in range(m):
        attacks.append((cs[j], clause_leaves[j]))
    lit_leaves = _attach_fanout_tree(args, attacks, 2 * n, "nphi", "bnphi")
    for i in range(n):
        attacks.append((lit_leaves[i], xs[i]))
        attacks.append((lit_leaves[n + i], nxs[i]))
    if include_e:
        args.append("e")
    return args, attacks, {name: name for name in args}


def _maximality_only(sigma: Semantics | str) -> Semantics:
    sigma = Semantics.parse(sigma)
    if sigma not in _MAXIMALITY:
        raise UnsupportedSemantics(
            "this construction needs a maximality semantics (prf or sem)"
        )
    return sigma


def gen_cnf_small(
    formula: ThreeCnfTwoFormula, sigma: Semantics | str = Semantics.PREFERRED
) -> GadgetOutput:
    """Encode unsatisfiability of formula as a size-1 extension question
    under prf or sem, on a framework of maximum degree 5.

    The isolated probe e is the only possible size-1 witness; it stands
    alone exactly when no admissible set reaches the hub phi, which
    happens exactly when the formula is unsatisfiable.
    """
    sigma = _maximality_only(sigma)
    args, attacks, name_map = _cnf_base(formula, include_e=True)
    af = ArgumentationFramework(args, attacks)
    provenance = {
        "generator": "cnf-small",
        "source_digest": _digest(formula.canonical_text()),
        "parameters": {"n": formula.n, "m": formula.m, "k": 1},
        "max_degree": max_degree(af),
    }
    return _output(small_instance(af, sigma, 1), provenance, name_map)


def gen_cnf_adjust(
    formula: ThreeCnfTwoFormula, sigma: Semantics | str = Semantics.PREFERRED
) -> GadgetOutput:
    """Encode unsatisfiability of formula as a target-flip question with
    budget 2 under prf or sem, on a framework of maximum degree 5.

    The probe e is dropped; a toggle pair t1/t2 (mutual attacks, t1 also
    mutual with the hub phi) plus one self-attacking anchor per toggle
    pins {t1} as an extension, and flipping t1 out within distance 2 is
    possible exactly when the formula is unsatisfiable.
    """
    sigma = _maximality_only(sigma)
    args, attacks, name_map = _cnf_base(formula, include_e=False)
    args += ["t1", "t1p", "t2", "t2p"]
    attacks += [
        ("t1", "phi"),
        ("phi", "t1"),
        ("t1", "t2"),
        ("t2", "t1"),
        ("t1", "t1p"),
        ("t2", "t2p"),
        ("t1p", "t1p"),
        ("t2p", "t2p"),
    ]
    af = ArgumentationFramework(args, attacks)
    instance = adjust_instance(af, af.set_of(["t1"]), "t1", sigma, 2)
    for extra in ("t1", "t1p", "t2", "t2p"):
        name_map[extra] = extra
    provenance = {
        "generator": "cnf-adjust",
        "source_digest": _digest(formula.canonical_text()),
        "parameters": {"n": formula.n, "m": formula.m, "k": 2},
        "max_degree": max_degree(af),
    }
    return _output(instance, provenance, name_map)


def gen_cnf_center(
    formula: ThreeCnfTwoFormula, sigma: Semantics | str = Semantics.PREFERRED
) -> GadgetOutput:
    """Encode unsatisfiability of formula as a centering question between
    two antipodal extensions at distance 6 under prf or sem, on a
    framework of maximum degree 5.

    Twelve new arguments form the mirrored triples {t,w1p,w2p} and
    {tp,w1,w2} (the endpoints) plus six self-attacking anchors that pin
    maximality; a strictly closer middle extension such as {w1,w2p}
    exists exactly when the formula is unsatisfiable.
    """
    sigma = _maximality_only(sigma)
    args, attacks, name_map = _cnf_base(formula, include_e=False)
    extras = [
        "t",
        "tp",
        "w1",
        "w2",
        "w1p",
        "w2p",
        "z",
        "zp",
        "z1",
        "z1p",
        "z2",
        "z2p",
    ]
    args += extras
    attacks += [
        ("t", "z"),
        ("z", "z"),
        ("tp", "zp"),
        ("zp", "zp"),
        ("w1", "z1"),
        ("z1", "z1"),
        ("w1p", "z1p"),
        ("z1p", "z1p"),
        ("w2", "z2"),
        ("z2", "z2"),
        ("w2p", "z2p"),
        ("z2p", "z2p"),
        ("t", "phi"),
        ("phi", "t"),
        ("tp", "phi"),
        ("phi", "tp"),
        ("t", "tp"),
        ("tp", "t"),
        ("w1", "w1p"),
        ("w1p", "w1"),
        ("w2", "w2p"),
        ("w2p", "w2"),
        ("w1", "t"),
        ("w2", "t"),
        ("w1p", "tp"),
        ("w2p", "tp"),
    ]
    af = ArgumentationFramework(args, attacks)
    e1 = af.set_of(["t", "w1p", "w2p"])
    e2 = af.set_of(["tp", "w1", "w2"])
    if distance(e1, e2) != 6:
        raise ArgudynError("endpoint distance drifted from 6")
    instance = center_instance(af, e1, e2, sigma)
    for extra in extras:
        name_map[extra] = extra
    provenance = {
        "generator": "cnf-center",
        "source_digest": _digest(formula.canonical_text()),
        "parameters": {"n": formula.n, "m": formula.m, "threshold": 5},
        "max_degree": max_degree(af),
    }
    return _output(instance, provenance, name_map)


def sat_oracle(formula: ThreeCnfTwoFormula, cap: int = SAT_ORACLE_CAP) -> bool:
    """Exhaustive satisfiability check, the ground truth for the formula
    generators' yes/no cross-checks.  Capped at cap variables."""
    if formula.n > cap:
        raise CapExceeded(formula.n, cap)
    for bits in range(1 << formula.n):
        sat = True
        for clause in formula.clauses:
            if not any(
                ((bits >> (abs(lit) - 1)) & 1) == (1 if lit > 0 else 0)
                for lit in clause
            ):
                sat = False
                break
        if sat:
            return True
    return False


# -- seeded source-object generators -----------------------------------------


def random_kpartite(
    rng: random.Random,
    k: int,
    max_part_size: int = 3,
    edge_prob: float = 0.5,
) -> KPartiteGraph:
    """Seeded graph source: k parts of size 1..max_part_size, each
    cross-part vertex pair becoming an edge with probability edge_prob."""
    if k < 1 or max_part_size < 1:
        raise ValueError("need k >= 1 and max_part_size >= 1")
    parts: list[tuple[str, ...]] = []
    counter = 1
    for _ in range(k):
        size = rng.randint(1, max_part_size)
        parts.append(tuple(f"v{counter + idx}" for idx in range(size)))
        counter += size
    edges: set[frozenset[str]] = set()
    for i in range(k):
        for j in range(i + 1, k):
            for u in parts[i]:
                for v in parts[j]:
                    if rng.random() < edge_prob:
                        edges.add(frozenset((u, v)))
    return KPartiteGraph(tuple(parts), frozenset(edges))


def random_three_cnf_two(
    rng: random.Random, n: int, m: int
) -> ThreeCnfTwoFormula:
    """Seeded formula source honoring the occurrence cap by rejection;
    falls back to shorter clauses when a sampled one cannot be placed."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    if m > 4 * n:
        raise ValueError("the occurrence cap allows at most 4n clauses")
    counts: dict[int, int] = {}
    clauses: list[frozenset[int]] = []
    for _ in range(m):
        placed = None
        preferred = rng.randint(1, min(3, n))
        for size in range(preferred, 0, -1):
            for _attempt in range(50):
                chosen = rng.sample(range(1, n + 1), size)
                clause = frozenset(
                    v if rng.random() < 0.5 else -v for v in chosen
                )
                if all(counts.get(lit, 0) < 2 for lit in clause):
                    placed = clause
                    break
            if placed is not None:
                break
        if placed is None:
            capacity = [
                lit
                for v in range(1, n + 1)
                for lit in (v, -v)
                if counts.get(lit, 0) < 2
            ]
            placed = frozenset((rng.choice(capacity),))
        for lit in placed:
            counts[lit] = counts.get(lit, 0) + 1
        clauses.append(placed)
    return ThreeCnfTwoFormula(n, tuple(clauses))
