import random

import pytest

from argudyn import ArgumentationFramework


@pytest.fixture
def f1():
    """Mutual attack pair."""
    return ArgumentationFramework(("a", "b"), [("a", "b"), ("b", "a")])


@pytest.fixture
def f2():
    """Directed 3-cycle."""
    return ArgumentationFramework(
        ("a", "b", "c"), [("a", "b"), ("b", "c"), ("c", "a")]
    )


@pytest.fixture
def f3():
    """Chain a -> b -> c."""
    return ArgumentationFramework(("a", "b", "c"), [("a", "b"), ("b", "c")])


@pytest.fixture
def f4():
    """Two disjoint mutual-attack pairs."""
    return ArgumentationFramework(
        ("a", "b", "c", "d"),
        [("a", "b"), ("b", "a"), ("c", "d"), ("d", "c")],
    )


def random_framework(rng: random.Random, n: int, self_prob=0.2, edge_prob=0.25):
    names = tuple(f"x{i}" for i in range(n))
    attacks = [(a, a) for a in names if rng.random() < self_prob]
    attacks += [
        (a, b)
        for a in names
        for b in names
        if a != b and rng.random() < edge_prob
    ]
    return ArgumentationFramework(names, attacks)


@pytest.fixture
def make_af():
    return random_framework
