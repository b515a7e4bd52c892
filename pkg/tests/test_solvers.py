import random

import pytest

from argudyn import (
    ArgumentationFramework,
    CapExceeded,
    NotAnExtension,
    Semantics,
    distance,
    enumerate_extensions,
    solve_adjust,
    solve_center,
    solve_instance,
    solve_repair,
    solve_small,
    adjust_instance,
    center_instance,
    repair_instance,
    small_instance,
)
from argudyn.solvers import (
    fo_solve_adjust,
    fo_solve_center,
    fo_solve_repair,
    fo_solve_small,
    solve_repair_branching,
)
from conftest import random_framework
from oracles import (
    oracle_adjust,
    oracle_center,
    oracle_distance,
    oracle_repair,
    oracle_small,
)

FO_SIGMAS = (Semantics.ADMISSIBLE, Semantics.COMPLETE, Semantics.STABLE)


def test_small_hand_cases(f1, f2):
    res = solve_small(f1, Semantics.STABLE, 1)
    assert res.answer and res.witness.names == ("a",)
    assert not solve_small(f2, Semantics.ADMISSIBLE, 3).answer
    res2 = solve_small(f1, Semantics.PREFERRED, 2)
    assert res2.answer and res2.witness.names == ("a",)
    with pytest.raises(ValueError):
        solve_small(f1, Semantics.STABLE, -1)


def test_small_requires_nonempty_witness(f2):
    # empty set is admissible everywhere but never a small witness
    for k in (1, 2, 3):
        assert not solve_small(f2, Semantics.ADMISSIBLE, k).answer


def test_repair_hand_cases(f1, f4):
    # distance 0: the set itself is stable
    res = solve_repair(f1, f1.set_of(["a"]), Semantics.STABLE, 0)
    assert res.answer and res.witness.names == ("a",)
    # swapping sides costs 2
    assert not solve_repair(f1, f1.set_of(["a"]), Semantics.STABLE, 1).answer or (
        solve_repair(f1, f1.set_of(["a"]), Semantics.STABLE, 1).witness.names
        == ("a",)
    )
    res2 = solve_repair(f4, f4.set_of(["a", "b"]), Semantics.STABLE, 2)
    assert res2.answer
    assert distance(res2.witness, f4.set_of(["a", "b"])) <= 2
    # repairing the empty set is exactly the small question
    res3 = solve_repair(f4, f4.empty_set(), Semantics.STABLE, 2)
    assert res3.answer and len(res3.witness) == 2


def test_adjust_hand_cases(f1, f3):
    # drop the target to reach the empty admissible set
    res = solve_adjust(f3, f3.set_of(["a", "c"]), "a", Semantics.ADMISSIBLE, 2)
    assert res.answer and res.witness.names == ()
    # the same instance with nonempty witnesses required has none
    assert not solve_adjust(
        f3, f3.set_of(["a", "c"]), "a", Semantics.ADMISSIBLE, 2,
        require_nonempty=True,
    ).answer
    # k=0 leaves no room to toggle anything
    assert not solve_adjust(f1, f1.set_of(["a"]), "b", Semantics.STABLE, 0).answer
    res2 = solve_adjust(f1, f1.set_of(["a"]), "b", Semantics.STABLE, 2)
    assert res2.answer and res2.witness.names == ("b",)


def test_adjust_validates_start_extension(f1):
    with pytest.raises(NotAnExtension):
        solve_adjust(f1, f1.full_set(), "a", Semantics.ADMISSIBLE, 1)


def test_center_hand_cases(f1, f4):
    res = solve_center(
        f4, f4.set_of(["a", "c"]), f4.set_of(["b", "d"]), Semantics.STABLE
    )
    assert res.answer
    w = res.witness
    assert distance(w, f4.set_of(["a", "c"])) < 4
    assert distance(w, f4.set_of(["b", "d"])) < 4
    # endpoints at distance 2 have no strict midpoint
    assert not solve_center(
        f1, f1.set_of(["a"]), f1.set_of(["b"]), Semantics.STABLE
    ).answer
    # coinciding endpoints: distance 0 admits nothing strictly closer
    assert not solve_center(
        f1, f1.set_of(["a"]), f1.set_of(["a"]), Semantics.STABLE
    ).answer


def test_center_validates_endpoints(f4):
    with pytest.raises(NotAnExtension):
        solve_center(
            f4, f4.set_of(["a", "b"]), f4.set_of(["b", "d"]), Semantics.STABLE
        )


def test_center_empty_witness_default(f3):
    # E1={a,c}, E2=∅ both admissible, distance 2; ∅ itself is not strictly
    # closer to E2 than... distance(∅,E2)=0 < 2 and distance(∅,E1)=2 is not
    # < 2, so the only candidates sit at distance 1 from E1.
    res = solve_center(f3, f3.set_of(["a", "c"]), f3.empty_set(),
                       Semantics.ADMISSIBLE)
    assert res.answer and res.witness.names == ("a",)


def _random_set(rng, af):
    return af.set_from_mask(rng.randrange(1 << af.n))


def test_delta_answers_match_oracle():
    rng = random.Random(2024)
    for _ in range(60):
        af = random_framework(rng, rng.randint(1, 6))
        sigma = rng.choice(list(Semantics))
        k = rng.randint(0, 3)
        args, attacks = af.arguments, set(af.attacks)
        want_small = bool(oracle_small(args, attacks, sigma.value, max(k, 1)))
        assert solve_small(af, sigma, max(k, 1)).answer == want_small
        s = _random_set(rng, af)
        want_rep = bool(
            oracle_repair(args, attacks, sigma.value, frozenset(s.names), k)
        )
        assert solve_repair(af, s, sigma, k).answer == want_rep
        exts = list(enumerate_extensions(af, sigma))
        if exts:
            e0 = rng.choice(exts)
            target = rng.choice(af.arguments)
            want_adj = bool(
                oracle_adjust(
                    args, attacks, sigma.value, frozenset(e0.names), target, k
                )
            )
            assert solve_adjust(af, e0, target, sigma, k).answer == want_adj
            e1, e2 = rng.choice(exts), rng.choice(exts)
            want_cen = bool(
                oracle_center(
                    args, attacks, sigma.value,
                    frozenset(e1.names), frozenset(e2.names),
                )
            )
            assert solve_center(af, e1, e2, sigma).answer == want_cen


def _witness_is_valid(af, instance_kind, res, sigma, **kw):
    w = frozenset(res.witness.names)
    args, attacks = af.arguments, set(af.attacks)
    from oracles import oracle_extensions

    assert w in oracle_extensions(args, attacks, sigma.value)
    if instance_kind == "small":
        assert 0 < len(w) <= kw["k"]
    elif instance_kind == "repair":
        assert w and oracle_distance(w, kw["s"]) <= kw["k"]
    elif instance_kind == "adjust":
        assert oracle_distance(w, kw["e0"]) <= kw["k"]
        assert kw["target"] in (w ^ kw["e0"])
    else:
        d = oracle_distance(kw["e1"], kw["e2"])
        assert oracle_distance(w, kw["e1"]) < d
        assert oracle_distance(w, kw["e2"]) < d


def test_three_engines_agree_with_verified_witnesses():
    rng = random.Random(777)
    for _ in range(40):
        af = random_framework(rng, rng.randint(1, 6))
        sigma = rng.choice(FO_SIGMAS)
        k = rng.randint(0, 3)
        args, attacks = af.arguments, set(af.attacks)

        d_small = solve_small(af, sigma, max(k, 1))
        f_small = fo_solve_small(af, sigma, max(k, 1))
        assert d_small.answer == f_small.answer
        for res in (d_small, f_small):
            if res.answer:
                _witness_is_valid(af, "small", res, sigma, k=max(k, 1))

        s = _random_set(rng, af)
        d_rep = solve_repair(af, s, sigma, k)
        b_rep = solve_repair_branching(af, s, sigma, k)
        f_rep = fo_solve_repair(af, s, sigma, k)
        assert d_rep.answer == b_rep.answer == f_rep.answer
        for res in (d_rep, b_rep, f_rep):
            if res.answer:
                _witness_is_valid(
                    af, "repair", res, sigma, s=frozenset(s.names), k=k
                )

        exts = list(enumerate_extensions(af, sigma))
        if not exts:
            continue
        e0 = rng.choice(exts)
        target = rng.choice(af.arguments)
        d_adj = solve_adjust(af, e0, target, sigma, k)
        f_adj = fo_solve_adjust(af, e0, target, sigma, k)
        assert d_adj.answer == f_adj.answer
        for res in (d_adj, f_adj):
            if res.answer:
                _witness_is_valid(
                    af, "adjust", res, sigma,
                    e0=frozenset(e0.names), target=target, k=k,
                )

        e1, e2 = rng.choice(exts), rng.choice(exts)
        d_cen = solve_center(af, e1, e2, sigma)
        f_cen = fo_solve_center(af, e1, e2, sigma)
        assert d_cen.answer == f_cen.answer
        for res in (d_cen, f_cen):
            if res.answer:
                _witness_is_valid(
                    af, "center", res, sigma,
                    e1=frozenset(e1.names), e2=frozenset(e2.names),
                )


def test_delta_witness_has_minimal_distance(f4):
    # the reported repair witness sits at the least possible distance
    res = solve_repair(f4, f4.set_of(["a", "c"]), Semantics.STABLE, 4)
    assert res.answer and res.witness.names == ("a", "c")


def test_prf_sem_validation_uses_cap():
    names = tuple(f"x{i}" for i in range(21)) + ("y",)
    attacks = [(n, "y") for n in names if n != "y"]
    big = ArgumentationFramework(names, attacks)
    e_full = big.set_of(names[:-1])
    with pytest.raises(CapExceeded):
        solve_adjust(big, e_full, "y", Semantics.PREFERRED, 1)
    res = solve_adjust(big, e_full, "y", Semantics.PREFERRED, 1, cap=25)
    assert not res.answer


def test_solve_instance_dispatch(f1):
    inst = small_instance(f1, Semantics.STABLE, 1)
    assert solve_instance(inst).answer
    assert solve_instance(inst, engine="fo").answer
    with pytest.raises(ValueError):
        solve_instance(inst, engine="quantum")
    with pytest.raises(ValueError):
        solve_instance(inst, engine="branching")
    rep = repair_instance(f1, f1.set_of(["a"]), Semantics.ADMISSIBLE, 1)
    assert solve_instance(rep, engine="branching").answer
    adj = adjust_instance(f1, f1.set_of(["a"]), "a", Semantics.ADMISSIBLE, 1)
    assert solve_instance(adj).answer
    assert solve_instance(adj, engine="fo").answer
    cen = center_instance(f1, f1.set_of(["a"]), f1.set_of(["b"]), Semantics.STABLE)
    assert not solve_instance(cen).answer
    assert not solve_instance(cen, engine="fo").answer


def test_instance_parameter_and_validation(f1, f4):
    cen = center_instance(
        f4, f4.set_of(["a", "c"]), f4.set_of(["b", "d"]), Semantics.STABLE
    )
    assert cen.parameter() == 4
    assert small_instance(f1, Semantics.STABLE, 2).parameter() == 2
    with pytest.raises(ValueError):
        small_instance(f1, Semantics.STABLE, -1)
    with pytest.raises(ValueError):
        adjust_instance(f1, f1.set_of(["a"]), "zz", Semantics.STABLE, 1)
    with pytest.raises(ValueError):
        repair_instance(f1, f4.set_of(["a"]), Semantics.STABLE, 1)


def test_stats_are_populated(f1):
    res = solve_small(f1, Semantics.STABLE, 1)
    assert res.stats.candidates >= 1
    assert res.stats.seconds >= 0.0
    b = solve_repair_branching(f1, f1.set_of(["a"]), Semantics.ADMISSIBLE, 1)
    assert b.stats.nodes >= 1
