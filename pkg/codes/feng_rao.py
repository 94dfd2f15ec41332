# codes/feng_rao.py
# Feng-Rao function nu_l and the order bound d_ORD for one-point codes

from typing import List, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from semigroups.errors import FullSemigroupError
from semigroups.numerical_semigroup import NumericalSemigroup


def horizon(semigroup: NumericalSemigroup) -> int:
    """Index 2c - g - 1 from which d_ORD(l) = l + 1 - g"""
    return 2 * semigroup.conductor - semigroup.genus - 1


def goppa_floor(semigroup: NumericalSemigroup, ell: int) -> int:
    """Goppa-type lower bound l + 1 - g"""
    return ell + 1 - semigroup.genus


def _pair_count(membership: np.ndarray, target: int) -> int:
    window = membership[: target + 1]
    return int(np.count_nonzero(window & window[::-1]))


def nu(semigroup: NumericalSemigroup, ell: int) -> int:
    """
    Feng-Rao function: ordered pairs (a, b) of elements with a + b = rho_{l+1}

    Both (0, rho_{l+1}) and (rho_{l+1}, 0) are counted.

    Args:
        semigroup: Numerical semigroup
        ell: Positive index

    Returns:
        nu_l >= 2
    """
    if ell < 1:
        raise ValueError(f"index must be >= 1, got {ell}")
    target = semigroup.element_at_index(ell + 1)
    return _pair_count(semigroup.membership_upto(target), target)


def d_ord(semigroup: NumericalSemigroup, ell: int) -> int:
    """
    Order bound min{nu_m : m >= l}

    Past the horizon L = 2c - g - 1 the bound equals l + 1 - g; below it the
    minimum runs over [l, L] since nu_m = m + 1 - g increases beyond L.
    """
    if ell < 1:
        raise ValueError(f"index must be >= 1, got {ell}")
    last = horizon(semigroup)
    if ell >= last:
        return goppa_floor(semigroup, ell)
    return min(nu(semigroup, m) for m in range(ell, last + 1))


class OrderBoundTable(BaseModel):
    """
    nu_l and d_ORD(l) for 1 <= l <= L = 2c - g - 1

    Lists are zero-based: nu_values[l - 1] holds nu_l.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    semigroup: NumericalSemigroup
    horizon_L: int
    rho_values: Tuple[int, ...]
    nu_values: Tuple[int, ...]
    d_ord_values: Tuple[int, ...]

    def rho_at(self, ell: int) -> int:
        if 1 <= ell <= self.horizon_L:
            return self.rho_values[ell - 1]
        return self.semigroup.element_at_index(ell)

    def nu_at(self, ell: int) -> int:
        if 1 <= ell <= self.horizon_L:
            return self.nu_values[ell - 1]
        return nu(self.semigroup, ell)

    def d_ord_at(self, ell: int) -> int:
        if ell < 1:
            raise ValueError(f"index must be >= 1, got {ell}")
        if ell <= self.horizon_L:
            return self.d_ord_values[ell - 1]
        return goppa_floor(self.semigroup, ell)

    def rows(self) -> List[Tuple[int, int, int, int]]:
        """(l, rho_l, nu_l, d_ORD(l)) for every tabulated index"""
        return [
            (ell, self.rho_values[ell - 1], self.nu_values[ell - 1], self.d_ord_values[ell - 1])
            for ell in range(1, self.horizon_L + 1)
        ]


def build_table(semigroup: NumericalSemigroup) -> OrderBoundTable:
    """
    Tabulate nu and d_ORD over [1, 2c - g - 1]

    The suffix minimum is a single backward sweep seeded with nu at the
    horizon, where nu_L = L + 1 - g.

    Raises:
        FullSemigroupError: genus 0
    """
    if semigroup.genus == 0:
        raise FullSemigroupError("order bound table needs genus >= 1")

    last = horizon(semigroup)
    top = semigroup.element_at_index(last + 1)
    membership = semigroup.membership_upto(top)

    rho_values = [semigroup.element_at_index(ell) for ell in range(1, last + 1)]
    nu_values = [_pair_count(membership, semigroup.element_at_index(ell + 1)) for ell in range(1, last + 1)]

    d_values = [0] * last
    running = nu_values[-1]
    for position in range(last - 1, -1, -1):
        running = min(running, nu_values[position])
        d_values[position] = running

    logger.debug(
        f"Order bound table: genus {semigroup.genus}, conductor {semigroup.conductor}, horizon {last}"
    )
    return OrderBoundTable(
        semigroup=semigroup,
        horizon_L=last,
        rho_values=tuple(rho_values),
        nu_values=tuple(nu_values),
        d_ord_values=tuple(d_values),
    )
