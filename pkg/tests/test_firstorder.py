import random

import pytest

from argudyn import (
    ArgumentationFramework,
    InvalidArity,
    Semantics,
    UnboundVariable,
    UnsupportedSemantics,
)
from argudyn.firstorder import (
    And,
    App1,
    App2,
    Eq,
    Exists,
    Forall,
    Implies,
    Not,
    Or,
    adjust_formula,
    adm_of,
    at_most,
    center_formula,
    cf_of,
    com_of,
    corrected_repair_formula,
    evaluate,
    gaifman_max_degree,
    repair_formula,
    set_formula,
    sigma_of,
    small_formula,
    stb_of,
    structure_of,
    sym_diff_of,
    unary_pred,
)
from argudyn import max_degree
from conftest import random_framework
from oracles import (
    oracle_admissible,
    oracle_complete,
    oracle_conflict_free,
    oracle_stable,
)


def _subset_structure(af, members):
    return structure_of(af, S=af.set_of(members))


def test_evaluate_basic_connectives(f1):
    st = structure_of(f1)
    assert evaluate(st, Eq("x", "y"), {"x": "a", "y": "a"})
    assert not evaluate(st, Eq("x", "y"), {"x": "a", "y": "b"})
    assert evaluate(st, App2("A", "x", "y"), {"x": "a", "y": "b"})
    assert evaluate(st, Exists("x", App2("A", "x", "x"))) is False
    assert evaluate(st, Forall("x", Exists("y", App2("A", "x", "y"))))
    assert evaluate(st, Not(And((Eq("x", "x"), Not(Eq("x", "x"))))), {"x": "a"})
    assert evaluate(st, Or((Eq("x", "y"), Implies(Eq("x", "x"), Eq("y", "y")))),
                    {"x": "a", "y": "b"})


def test_evaluate_errors(f1):
    st = structure_of(f1)
    with pytest.raises(UnboundVariable):
        evaluate(st, Eq("x", "y"), {"x": "a"})
    with pytest.raises(ValueError):
        evaluate(st, Eq("x", "x"), {"x": "zz"})
    with pytest.raises(ValueError):
        evaluate(st, App1("A", "x"), {"x": "a"})
    with pytest.raises(ValueError):
        evaluate(st, App2("S", "x", "x"), {"x": "a"})
    with pytest.raises(ValueError):
        evaluate(st, App1("Q", "x"), {"x": "a"})


def test_sigma_formulas_match_checkers():
    rng = random.Random(314)
    for _ in range(30):
        af = random_framework(rng, rng.randint(1, 5))
        attacks = set(af.attacks)
        for s in af.all_subsets():
            st = structure_of(af, S=s)
            members = frozenset(s.names)
            assert evaluate(st, cf_of(unary_pred("S"))) == oracle_conflict_free(
                attacks, members
            )
            assert evaluate(st, adm_of(unary_pred("S"))) == oracle_admissible(
                attacks, members
            )
            assert evaluate(st, com_of(unary_pred("S"))) == oracle_complete(
                af.arguments, attacks, members
            )
            assert evaluate(st, stb_of(unary_pred("S"))) == oracle_stable(
                af.arguments, attacks, members
            )


def test_sigma_of_rejects_maximality_semantics():
    for sigma in (Semantics.PREFERRED, Semantics.SEMI_STABLE):
        with pytest.raises(UnsupportedSemantics) as err:
            sigma_of(sigma)
        assert sigma.value in str(err.value)


def test_set_formula_and_sym_diff(f4):
    st = structure_of(f4, S=f4.set_of(["a", "b"]), T=f4.set_of(["b", "c"]))
    f = set_formula(2)
    assert evaluate(st, f, {"y": "a", "x1": "a", "x2": "c"})
    assert not evaluate(st, f, {"y": "b", "x1": "a", "x2": "c"})
    diff = sym_diff_of(unary_pred("S"), unary_pred("T"))
    holds = {v for v in "abcd" if evaluate(st, diff, {"y": v})}
    assert holds == {"a", "c"}
    with pytest.raises(InvalidArity):
        set_formula(0)


def test_at_most_counts_distinct_elements(f4):
    st = structure_of(f4, S=f4.set_of(["a", "b", "c"]))
    assert not evaluate(st, at_most(unary_pred("S"), 2))
    assert evaluate(st, at_most(unary_pred("S"), 3))
    assert evaluate(st, at_most(unary_pred("S"), 4))
    with pytest.raises(InvalidArity):
        at_most(unary_pred("S"), -1)


def test_problem_formula_arity_guards():
    for builder, bad_k in (
        (small_formula, 0),
        (repair_formula, 0),
        (corrected_repair_formula, -1),
        (adjust_formula, 0),
        (center_formula, 1),
    ):
        with pytest.raises(InvalidArity):
            builder(Semantics.ADMISSIBLE, bad_k)


def test_small_formula_is_nonempty_and_size_bounded(f1, f3):
    st = structure_of(f3)
    # chain: {a} is admissible, so k=1 suffices
    assert evaluate(st, small_formula(Semantics.ADMISSIBLE, 1))
    # 3-cycle has no nonempty admissible set
    cyc = ArgumentationFramework(("a", "b", "c"), [("a", "b"), ("b", "c"), ("c", "a")])
    assert not evaluate(structure_of(cyc), small_formula(Semantics.ADMISSIBLE, 3))
    # mutual pair under stb at k=1
    assert evaluate(structure_of(f1), small_formula(Semantics.STABLE, 1))


def test_verbatim_repair_formula_deviates_both_ways(f1):
    # misses the distance-0 case: S itself is the only stable repair
    st = structure_of(f1, S=f1.set_of(["a"]))
    assert not evaluate(st, repair_formula(Semantics.STABLE, 1))
    assert evaluate(st, corrected_repair_formula(Semantics.STABLE, 1))
    # accepts the empty set: no nonempty admissible set exists here
    loop = ArgumentationFramework(("x",), [("x", "x")])
    st2 = structure_of(loop, S=loop.set_of(["x"]))
    assert evaluate(st2, repair_formula(Semantics.ADMISSIBLE, 1))
    assert not evaluate(st2, corrected_repair_formula(Semantics.ADMISSIBLE, 1))


def test_corrected_repair_formula_counts_distance_zero(f4):
    st = structure_of(f4, S=f4.set_of(["a", "c"]))
    assert evaluate(st, corrected_repair_formula(Semantics.STABLE, 0))
    st2 = structure_of(f4, S=f4.set_of(["a", "b"]))
    assert not evaluate(st2, corrected_repair_formula(Semantics.STABLE, 0))
    assert evaluate(st2, corrected_repair_formula(Semantics.STABLE, 2))


def test_adjust_formula_toggles_target(f1):
    # E0={a}, target b, k=2: {b} works (distance 2, toggles b in)
    st = structure_of(f1, E0=f1.set_of(["a"]), T=("b",))
    assert evaluate(st, adjust_formula(Semantics.STABLE, 2))
    # k=1 cannot both drop a and add b
    assert not evaluate(st, adjust_formula(Semantics.STABLE, 1))
    # under adm, k=1 toggles a out to the empty set
    st2 = structure_of(f1, E0=f1.set_of(["a"]), T=("a",))
    assert evaluate(st2, adjust_formula(Semantics.ADMISSIBLE, 1))


def test_center_formula_strict_betweenness(f4):
    st = structure_of(
        f4, E1=f4.set_of(["a", "c"]), E2=f4.set_of(["b", "d"])
    )
    assert evaluate(st, center_formula(Semantics.STABLE, 4))
    # mutual pair endpoints at distance 2 admit no strictly closer point
    pair = ArgumentationFramework(("a", "b"), [("a", "b"), ("b", "a")])
    st2 = structure_of(pair, E1=pair.set_of(["a"]), E2=pair.set_of(["b"]))
    assert not evaluate(st2, center_formula(Semantics.STABLE, 2))


def test_gaifman_degree_matches_framework_degree():
    rng = random.Random(271)
    for _ in range(25):
        af = random_framework(rng, rng.randint(1, 7))
        st = structure_of(af)
        assert gaifman_max_degree(st) == max_degree(af)
