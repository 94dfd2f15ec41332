# semigroups/suzuki_semigroups.py
# Weierstrass semigroups of the Suzuki curve S_q at rational and generic points
#
# The Weierstrass points of S_q are exactly its F_q-rational points, so the two
# semigroups built here cover every point of the curve.

from typing import Dict, List

from loguru import logger

from semigroups.numerical_semigroup import NumericalSemigroup
from state.semigroup_state import (
    F1Index,
    GeneratorKind,
    GeneratorLabel,
    PointType,
    SuzukiParams,
    ThresholdCase,
)


def _ceil_div(numerator: int, denominator: int) -> int:
    return -(-numerator // denominator)


def rational_point_semigroup(p: SuzukiParams) -> NumericalSemigroup:
    """
    H(P) at an F_q-rational point: <q, q+q0, q+2q0, q+2q0+1>

    Args:
        p: Curve parameters

    Returns:
        The symmetric semigroup of genus q0(q-1)
    """
    q, q0 = p.q, p.q0
    return NumericalSemigroup.from_generators([q, q + q0, q + 2 * q0, q + 2 * q0 + 1])


def m_threshold(p: SuzukiParams, j: int, k: int, ell: int) -> int:
    """
    Admissibility threshold m_{j,k,l} = ceil(q0/(q0-1) * (j+k+l - (k+l)/q))

    Computed on the cleared-denominator form
    ceil(q0 * (q(j+k+l) - (k+l)) / ((q0-1) q)).
    """
    q, q0 = p.q, p.q0
    return _ceil_div(q0 * (q * (j + k + ell) - (k + ell)), (q0 - 1) * q)


def threshold_case(p: SuzukiParams, j: int, k: int, ell: int) -> ThresholdCase:
    """
    Classify (j, k, l) by the closed form of m_{j,k,l}

    A: j = k = l = 0; B: j <= q0-1-(k+l), m = j+k+l+1;
    C: j >= q0-(k+l), m = j+k+l+2 whenever some admissible h exists.
    """
    if j == k == ell == 0:
        return ThresholdCase.A
    if j <= p.q0 - 1 - (k + ell):
        return ThresholdCase.B
    return ThresholdCase.C


def admissible_h_range(p: SuzukiParams, j: int, k: int, ell: int) -> range:
    """Values of h with max(1, m_{j,k,l}) <= h <= 2q0"""
    return range(max(1, m_threshold(p, j, k, ell)), 2 * p.q0 + 1)


def is_admissible(p: SuzukiParams, idx: F1Index) -> bool:
    q0 = p.q0
    if idx.j > q0 - 1 or idx.k > q0 - 1:
        return False
    return idx.h in admissible_h_range(p, idx.j, idx.k, idx.ell)


def f1_value(p: SuzukiParams, idx: F1Index) -> int:
    """n_{h,j,k,l} = hq - (l+2k)q0 - j"""
    return idx.h * p.q - (idx.ell + 2 * idx.k) * p.q0 - idx.j


def family_f1(p: SuzukiParams) -> Dict[F1Index, int]:
    """
    Enumerate F_1 as an index -> value map

    Args:
        p: Curve parameters

    Returns:
        Dict over every admissible (h, j, k, l)
    """
    family = {}
    for ell in (0, 1):
        for k in range(p.q0):
            for j in range(p.q0):
                for h in admissible_h_range(p, j, k, ell):
                    idx = F1Index(h=h, j=j, k=k, ell=ell)
                    family[idx] = f1_value(p, idx)
    logger.debug(f"F1 for q={p.q} has {len(family)} elements")
    return family


def f2_value(p: SuzukiParams, h_tilde: int) -> int:
    """n_{h~} = h~ q - (2h~ - 2q0 - 1) q0 - (q0 - 1)"""
    q, q0 = p.q, p.q0
    return h_tilde * q - (2 * h_tilde - 2 * q0 - 1) * q0 - (q0 - 1)


def family_f2(p: SuzukiParams) -> Dict[int, int]:
    """F_2 as a map h~ -> n_{h~} for h~ in [q0+1, 2q0]"""
    return {h_tilde: f2_value(p, h_tilde) for h_tilde in range(p.q0 + 1, 2 * p.q0 + 1)}


def nu_value(p: SuzukiParams, h: int, k: int) -> int:
    """nu_{h,k} = hq - k q0 - floor((2h-k-2)/2)"""
    return h * p.q - k * p.q0 - (2 * h - k - 2) // 2


def mu_value(p: SuzukiParams, h: int) -> int:
    """mu_h = hq - (2(h-q0)-1) q0 - (q0-1)"""
    return h * p.q - (2 * (h - p.q0) - 1) * p.q0 - (p.q0 - 1)


def nu_label(p: SuzukiParams, h: int, k: int) -> GeneratorLabel:
    return GeneratorLabel(kind=GeneratorKind.NU, h=h, k=k, value=nu_value(p, h, k))


def generator_set(p: SuzukiParams) -> List[GeneratorLabel]:
    """
    Minimal generating set of H(P) at a non-rational point

    Returns:
        nu_{h,k} for h in [1, q0], k in [0, 2h-2], then mu_h for h in [q0+1, 2q0];
        q0^2 + q0 labels in all
    """
    labels = [nu_label(p, h, k) for h in range(1, p.q0 + 1) for k in range(2 * h - 1)]
    labels.extend(
        GeneratorLabel(kind=GeneratorKind.MU, h=h, value=mu_value(p, h))
        for h in range(p.q0 + 1, 2 * p.q0 + 1)
    )
    return labels


def generator_values(p: SuzukiParams) -> List[int]:
    return sorted(label.value for label in generator_set(p))


def nonrational_point_semigroup(p: SuzukiParams) -> NumericalSemigroup:
    """H(P) at a point that is not F_q-rational, built from generator_set()"""
    return NumericalSemigroup.from_generators(generator_values(p))


def family_semigroup(p: SuzukiParams) -> NumericalSemigroup:
    """<F_1 u F_2>, built independently of the generator formulas"""
    values = list(family_f1(p).values()) + list(family_f2(p).values())
    return NumericalSemigroup.from_generators(values)


def semigroup_at(p: SuzukiParams, point: PointType) -> NumericalSemigroup:
    """Weierstrass semigroup at a point of the given type"""
    if point == PointType.RATIONAL:
        return rational_point_semigroup(p)
    return nonrational_point_semigroup(p)


def delta(p: SuzukiParams, idx: F1Index) -> int:
    """delta(n_{h,j,k,l}) = floor((2h - (l+2k) - 2)/2) - j = h - 1 - k - j - ceil(l/2)"""
    return (2 * idx.h - (idx.ell + 2 * idx.k) - 2) // 2 - idx.j


def decompose(p: SuzukiParams, idx: F1Index) -> List[GeneratorLabel]:
    """
    Write n_{h,j,k,l} as a sum of nu generators

    For l = 0 the element splits into delta + 1 generators nu_{h_i, 2a_i} with
    sum h_i = h and sum a_i = k. For l = 1 one generator (nu_{2,1} or nu_{i,1})
    is peeled off to reach an l = 0 element, unless the element is itself
    nu_{h, 2k+1}.

    Args:
        p: Curve parameters
        idx: Admissible F_1 index

    Returns:
        Labels whose values sum to n_{h,j,k,l}
    """
    if not is_admissible(p, idx):
        raise ValueError(f"{idx} is not an admissible F1 index for q={p.q}")

    q0 = p.q0
    if idx.ell == 0:
        parts = idx.h - idx.k - idx.j
        heights = [1] * parts
        spare = idx.h - parts
        for position in range(parts):
            extra = min(q0 - 1, spare)
            heights[position] += extra
            spare -= extra
        halves = []
        remaining = idx.k
        for height in heights:
            a = min(height - 1, remaining)
            halves.append(a)
            remaining -= a
        return [nu_label(p, height, 2 * a) for height, a in zip(heights, halves)]

    m = m_threshold(p, idx.j, idx.k, 1)
    if idx.h >= m + 1:
        rest = F1Index(h=idx.h - 2, j=idx.j, k=idx.k, ell=0)
        return [nu_label(p, 2, 1)] + decompose(p, rest)
    if idx.h <= q0:
        return [nu_label(p, idx.h, 2 * idx.k + 1)]
    i = idx.h - q0
    rest = F1Index(h=q0, j=idx.j - i + 2, k=idx.k, ell=0)
    return [nu_label(p, i, 1)] + decompose(p, rest)
