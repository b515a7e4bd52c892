"""Exhaustive extension enumeration and maximality-based membership checks."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .core import (
    ArgumentationFramework,
    ArgumentSet,
    Semantics,
    adm_mask,
    attacked_mask,
    cf_mask,
    com_mask,
    iter_bits,
    stb_mask,
)
from .errors import CapExceeded

DEFAULT_ENUM_CAP = 20
ENUM_CAP_ENV = "ARGUDYN_ENUM_CAP"


def resolve_cap(cap: int | None) -> int:
    """Explicit cap, else the ARGUDYN_ENUM_CAP env var, else the default."""
    if cap is not None:
        return cap
    env = os.environ.get(ENUM_CAP_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_ENUM_CAP


def _gate(af: ArgumentationFramework, cap: int | None) -> None:
    limit = resolve_cap(cap)
    if af.n > limit:
        raise CapExceeded(af.n, limit)


@dataclass(frozen=True)
class ExtensionList:
    """Extensions of one framework under one semantics, in canonical order."""

    semantics: Semantics
    extensions: tuple[ArgumentSet, ...]

    def __iter__(self) -> Iterator[ArgumentSet]:
        return iter(self.extensions)

    def __len__(self) -> int:
        return len(self.extensions)

    def __contains__(self, s: ArgumentSet) -> bool:
        return s in self.extensions

    def masks(self) -> set[int]:
        return {s.mask for s in self.extensions}


def _conflict_free_masks(af: ArgumentationFramework) -> list[int]:
    """All conflict-free subsets, by depth-first search over argument indices."""
    n = af.n
    attackers = af._attackers
    targets = af._targets
    out: list[int] = []

    def rec(i: int, mask: int) -> None:
        if i == n:
            out.append(mask)
            return
        rec(i + 1, mask)
        bit = 1 << i
        adj = attackers[i] | targets[i]
        if not (targets[i] & bit) and not (adj & mask):
            rec(i + 1, mask | bit)

    rec(0, 0)
    return out


def enumerate_extensions(
    af: ArgumentationFramework, sigma: Semantics, cap: int | None = None
) -> ExtensionList:
    """All sigma-extensions of af in canonical (cardinality, lexicographic) order."""
    _gate(af, cap)
    cf = _conflict_free_masks(af)
    if sigma is Semantics.STABLE:
        chosen = [m for m in cf if stb_mask(af, m)]
    else:
        adm = [m for m in cf if adm_mask(af, m)]
        if sigma is Semantics.ADMISSIBLE:
            chosen = adm
        elif sigma is Semantics.COMPLETE:
            chosen = [m for m in adm if com_mask(af, m)]
        elif sigma is Semantics.PREFERRED:
            chosen = [m for m in adm if not any(t != m and t & m == m for t in adm)]
        elif sigma is Semantics.SEMI_STABLE:
            ranges = {m: m | attacked_mask(af, m) for m in adm}
            chosen = [
                m
                for m in adm
                if not any(
                    ranges[t] != ranges[m] and ranges[t] & ranges[m] == ranges[m]
                    for t in adm
                )
            ]
        else:  # pragma: no cover - enum is closed
            raise ValueError(f"unhandled semantics {sigma}")
    sets = sorted((ArgumentSet(af, m) for m in chosen), key=ArgumentSet.sort_key)
    return ExtensionList(sigma, tuple(sets))


# -- maximality searches ----------------------------------------------------
#
# Membership in prf/sem needs a co-NP style check: no admissible superset /
# no admissible set with strictly larger range.  Both are decided by a
# backtracking search that grows a candidate set, branching over the
# defenders of an undefended member (or the covers of an uncovered target).
# The search is exponential in the worst case, hence the same cap gate as
# the enumerator, but it follows the attack structure so it stays shallow on
# the generated hardness instances.


def _grow_admissible(
    af: ArgumentationFramework, current: int, cover: int, failed: set[int]
) -> bool:
    """True iff some admissible superset of current covers all of cover.

    current must be conflict-free.  cover is a mask of arguments that must be
    in the final set or attacked by it.
    """
    if current in failed:
        return False
    attackers = af._attackers
    targets = af._targets
    attacked = attacked_mask(af, current)

    # first undefended member, in canonical order
    for i in iter_bits(current):
        hole = attackers[i] & ~attacked
        if hole:
            z = (hole & -hole).bit_length() - 1
            for w in iter_bits(attackers[z]):
                bit = 1 << w
                if current & bit:
                    continue
                if targets[w] & bit:
                    continue  # self-attacker can never join
                if (attackers[w] | targets[w]) & current:
                    continue  # would break conflict-freeness
                if _grow_admissible(af, current | bit, cover, failed):
                    return True
            failed.add(current)
            return False

    # first uncovered target
    uncovered = cover & ~(current | attacked)
    if uncovered:
        u = (uncovered & -uncovered).bit_length() - 1
        options = attackers[u] | (1 << u)
        for w in iter_bits(options):
            bit = 1 << w
            if current & bit:
                continue
            if targets[w] & bit:
                continue
            if (attackers[w] | targets[w]) & current:
                continue
            if _grow_admissible(af, current | bit, cover, failed):
                return True
        failed.add(current)
        return False

    return True


def exists_admissible_superset(
    af: ArgumentationFramework, seed_mask: int
) -> bool:
    """True iff some admissible set contains all of seed_mask."""
    if attacked_mask(af, seed_mask) & seed_mask:
        return False
    return _grow_admissible(af, seed_mask, 0, set())


def preferred_mask(
    af: ArgumentationFramework, mask: int, cap: int | None = None
) -> bool:
    _gate(af, cap)
    if not adm_mask(af, mask):
        return False
    for y in iter_bits(af.full_mask & ~mask):
        if exists_admissible_superset(af, mask | (1 << y)):
            return False
    return True


def semistable_mask(
    af: ArgumentationFramework, mask: int, cap: int | None = None
) -> bool:
    _gate(af, cap)
    if not adm_mask(af, mask):
        return False
    rng = mask | attacked_mask(af, mask)
    for z in iter_bits(af.full_mask & ~rng):
        if _grow_admissible(af, 0, rng | (1 << z), set()):
            return False
    return True


def is_preferred(
    af: ArgumentationFramework, s: ArgumentSet, cap: int | None = None
) -> bool:
    """S admissible with no admissible strict superset."""
    if s.af != af:
        raise ValueError("argument set does not belong to this framework")
    return preferred_mask(af, s.mask, cap)


def is_semistable(
    af: ArgumentationFramework, s: ArgumentSet, cap: int | None = None
) -> bool:
    """S admissible with subset-maximal range among admissible sets."""
    if s.af != af:
        raise ValueError("argument set does not belong to this framework")
    return semistable_mask(af, s.mask, cap)
