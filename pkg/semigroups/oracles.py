# semigroups/oracles.py
# Brute-force re-derivations used to cross-check the semigroup engine

from functools import lru_cache
from typing import Iterable, List, Set

from semigroups.numerical_semigroup import NumericalSemigroup


def knapsack_reachable(gens: Iterable[int], limit: int) -> Set[int]:
    """
    All nonnegative combinations of gens up to limit, by breadth-first search

    Args:
        gens: Positive integers
        limit: Largest value of interest

    Returns:
        Set of reachable values in [0, limit]
    """
    steps = sorted({int(g) for g in gens})
    reachable = {0}
    frontier = [0]
    while frontier:
        next_frontier = []
        for value in frontier:
            for step in steps:
                total = value + step
                if total <= limit and total not in reachable:
                    reachable.add(total)
                    next_frontier.append(total)
        frontier = next_frontier
    return reachable


def knapsack_contains(gens: Iterable[int], x: int) -> bool:
    """Membership by explicit search over multiplicity vectors"""
    steps = sorted({int(g) for g in gens}, reverse=True)

    @lru_cache(maxsize=None)
    def search(remaining: int, position: int) -> bool:
        if remaining == 0:
            return True
        if position == len(steps):
            return False
        step = steps[position]
        for count in range(remaining // step, -1, -1):
            if search(remaining - count * step, position + 1):
                return True
        return False

    return x >= 0 and search(x, 0)


def brute_force_gaps(gens: Iterable[int], limit: int) -> List[int]:
    """Values in [0, limit] missing from the reachable set"""
    reachable = knapsack_reachable(gens, limit)
    return [x for x in range(limit + 1) if x not in reachable]


def pairwise_sum_minimal_generators(semigroup: NumericalSemigroup) -> List[int]:
    """Minimal generators by sieving out every sum of two nonzero elements"""
    limit = semigroup.conductor + semigroup.multiplicity
    elements = [x for x in range(1, limit + 1) if semigroup.contains(x)]
    sums = {a + b for a in elements for b in elements if a + b <= limit}
    return [x for x in elements if x not in sums]


def pointwise_symmetric(semigroup: NumericalSemigroup) -> bool:
    """x in S <=> F - x not in S, checked for every x in [0, F]"""
    frobenius = semigroup.frobenius
    return all(
        semigroup.contains(x) != semigroup.contains(frobenius - x)
        for x in range(frobenius + 1)
    )


def brute_force_nu(semigroup: NumericalSemigroup, ell: int) -> int:
    """Ordered pairs of elements summing to rho_{ell+1}, by a double loop"""
    target = semigroup.element_at_index(ell + 1)
    elements = [x for x in range(target + 1) if semigroup.contains(x)]
    return sum(1 for a in elements for b in elements if a + b == target)
