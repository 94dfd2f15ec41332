# semigroups/numerical_semigroup.py
# Numerical semigroup engine: membership table, gaps, conductor, generators

import math
from typing import Iterable, List, Optional

import numpy as np
from loguru import logger

from config.settings import get_settings
from semigroups.errors import (
    EmptyGeneratorsError,
    FullSemigroupError,
    GcdNotOneError,
    InvalidGeneratorError,
    NotAnElementError,
    SemigroupError,
    SemigroupTooLargeError,
)


class NumericalSemigroup:
    """
    Numerical semigroup <a_1, ..., a_n> with a materialized membership table

    The table covers [0, bound] with bound >= conductor + max(generators);
    beyond it membership is decided by x >= conductor. Instances are
    immutable once built.
    """

    def __init__(self, generators: List[int], membership: np.ndarray, conductor: int):
        """
        Wrap precomputed data; use from_generators() to build an instance

        Args:
            generators: Sorted, deduplicated generators
            membership: Boolean table over [0, bound]
            conductor: Least c with [c, inf) inside the semigroup
        """
        self._generators = tuple(generators)
        self._membership = membership
        self._membership.setflags(write=False)
        self._conductor = conductor
        self._small_elements = np.flatnonzero(membership[:conductor])
        self._genus = conductor - len(self._small_elements)

    @classmethod
    def from_generators(cls, gens: Iterable[int], bound: Optional[int] = None) -> "NumericalSemigroup":
        """
        Build the semigroup generated by gens

        Membership is swept upwards (x is an element iff x = 0 or x - a is an
        element for some generator a <= x) until multiplicity-many consecutive
        elements appear; the start of that run is the conductor.

        Args:
            gens: Positive integers with gcd 1; duplicates and order are ignored
            bound: Optional larger materialization bound

        Returns:
            NumericalSemigroup

        Raises:
            EmptyGeneratorsError, InvalidGeneratorError, GcdNotOneError,
            SemigroupTooLargeError
        """
        normalized = sorted({int(g) for g in gens})
        if not normalized:
            raise EmptyGeneratorsError("at least one generator is required")
        if normalized[0] < 1:
            raise InvalidGeneratorError(f"generators must be >= 1, got {normalized[0]}")
        divisor = math.gcd(*normalized)
        if divisor != 1:
            raise GcdNotOneError(normalized, divisor)

        multiplicity, largest = normalized[0], normalized[-1]
        # Schur: conductor <= (a_1 - 1)(a_n - 1)
        sweep_limit = (multiplicity - 1) * (largest - 1) + multiplicity
        max_bound = get_settings().max_bound
        if max(sweep_limit, bound or 0) > max_bound:
            raise SemigroupTooLargeError(
                f"membership table of size {max(sweep_limit, bound or 0)} exceeds max_bound={max_bound}"
            )

        gen_array = np.asarray(normalized, dtype=np.int64)
        sweep = np.zeros(sweep_limit + 1, dtype=bool)
        conductor = None
        run = 0
        usable = 0
        for x in range(sweep_limit + 1):
            if x == 0:
                member = True
            else:
                while usable < len(gen_array) and gen_array[usable] <= x:
                    usable += 1
                member = bool(sweep[x - gen_array[:usable]].any())
            sweep[x] = member
            run = run + 1 if member else 0
            if run == multiplicity:
                conductor = x - multiplicity + 1
                break
        if conductor is None:
            raise SemigroupError(f"no conductor found below {sweep_limit} for {normalized}")

        table_bound = max(conductor + largest, bound or 0)
        membership = np.ones(table_bound + 1, dtype=bool)
        membership[:conductor] = sweep[:conductor]

        logger.debug(
            f"Built semigroup with {len(normalized)} generators, conductor {conductor}, bound {table_bound}"
        )
        return cls(normalized, membership, conductor)

    # ---------------------------------------------------------------- invariants

    @property
    def generators(self) -> List[int]:
        return list(self._generators)

    @property
    def bound(self) -> int:
        return len(self._membership) - 1

    @property
    def membership(self) -> np.ndarray:
        """Read-only boolean table over [0, bound]"""
        return self._membership

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def genus(self) -> int:
        return self._genus

    @property
    def frobenius(self) -> int:
        """Largest gap, -1 for <1>"""
        return self._conductor - 1

    @property
    def multiplicity(self) -> int:
        """Least nonzero element"""
        return self._generators[0]

    @property
    def small_elements(self) -> List[int]:
        """Sorted elements below the conductor"""
        return self._small_elements.tolist()

    # ---------------------------------------------------------------- queries

    def contains(self, x: int) -> bool:
        """True iff x is a nonnegative combination of the generators"""
        if x < 0:
            return False
        if x >= self._conductor:
            return True
        return bool(self._membership[x])

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def membership_upto(self, n: int) -> np.ndarray:
        """
        Membership over [0, n], extending past the bound by the conductor rule

        Args:
            n: Last value to cover

        Returns:
            Boolean array of length n + 1
        """
        if n <= self.bound:
            return self._membership[: n + 1]
        extended = np.ones(n + 1, dtype=bool)
        extended[: self.bound + 1] = self._membership
        return extended

    def gaps(self) -> List[int]:
        return np.flatnonzero(~self._membership[: self._conductor]).tolist()

    def is_symmetric(self) -> bool:
        """
        Symmetry test F = 2g - 1

        Raises:
            FullSemigroupError: genus 0, where symmetry is undefined
        """
        if self._genus == 0:
            raise FullSemigroupError("symmetry is undefined for <1>")
        return self.frobenius == 2 * self._genus - 1

    def minimal_generating_set(self) -> List[int]:
        """
        Nonzero elements that are not a sum of two nonzero elements

        Every minimal generator lies below conductor + multiplicity.
        """
        limit = self._conductor + self.multiplicity
        table = self.membership_upto(limit)
        minimal = []
        for x in range(1, limit + 1):
            if not table[x]:
                continue
            # pairs (a, x - a) with 0 < a < x
            left = table[1:x]
            if not np.any(left & left[::-1]):
                minimal.append(x)
        return minimal

    def element_at_index(self, ell: int) -> int:
        """
        The ell-th smallest element rho_ell, with rho_1 = 0

        Args:
            ell: Positive index

        Returns:
            rho_ell
        """
        if ell < 1:
            raise ValueError(f"index must be >= 1, got {ell}")
        below = len(self._small_elements)
        if ell <= below:
            return int(self._small_elements[ell - 1])
        return ell - 1 + self._genus

    def index_of(self, x: int) -> int:
        """
        Inverse of element_at_index

        Raises:
            NotAnElementError: x is a gap or negative
        """
        if not self.contains(x):
            raise NotAnElementError(x)
        if x >= self._conductor:
            return x - self._genus + 1
        return int(np.searchsorted(self._small_elements, x)) + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self._conductor == other._conductor and np.array_equal(
            self._membership[: self._conductor], other._membership[: other._conductor]
        )

    def __hash__(self) -> int:
        return hash((self._conductor, self._membership[: self._conductor].tobytes()))

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self._generators)}, genus={self._genus}, conductor={self._conductor})"
