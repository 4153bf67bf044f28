"""Extremal counting problems behind the list-size bounds.

Two exhaustive searches live here.  The first maximizes, over k x d
matrices on GF(2), the number of nonsingular k x k column submatrices;
equivalently, over families of d vectors in GF(2)^k, the number of
k-subsets forming a basis.  The second maximizes the sum-of-products
functional over integer partitions, which counts edges of complete
multipartite uniform hypergraphs and gives the lower bounds on list
sizes.  A closed-form lower bound from maximum-product partitions and a
small bounds table round out the module.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .basisprob import uniform_basis_probability
from .errors import OutOfRegimeError
from .gf2 import GF2Matrix, rank_ints

# Cap on (candidate matrices) * (column subsets per matrix) for the
# exhaustive basis-subset search.
DEFAULT_WORK_BUDGET = 20_000_000


@dataclass(frozen=True)
class BasisSubsetMaximum:
    k: int
    d: int
    value: int
    witness: GF2Matrix


@dataclass(frozen=True)
class BasisSubsetBounds:
    """Bounds on the basis-subset maximum that do not rely on the search.

    random_lower: ceil(P(k) * C(d, k)), from a uniformly random matrix.
    monotone_upper: scaling B(k, d') by C(d, k)/C(d', k) from the largest
        searchable d' <= d; the per-k-subset success ratio cannot grow
        with d.
    dense_upper: floor(P(k) * d^k / k!), valid once d >= k*k.
    deletion_upper: floor(d * B(k-1, d-1) / k), by double counting column
        deletions; present when k >= 2 and the smaller search fits the
        budget.
    """

    k: int
    d: int
    random_lower: int
    monotone_upper: Optional[int]
    dense_upper: Optional[int]
    deletion_upper: Optional[int]


@lru_cache(maxsize=None)
def _independent_subset_table(k: int) -> frozenset:
    """Sorted k-tuples of distinct nonzero vectors of GF(2)^k with rank k."""
    return frozenset(
        s for s in itertools.combinations(range(1, 1 << k), k)
        if rank_ints(s) == k)


def _search_size(k: int, d: int) -> int:
    """Candidate matrices times submatrices tested per matrix.

    Every matrix achieving the maximum has full row rank and no zero
    column, and row operations plus column permutations preserve the
    count, so candidates can be normalized to [I_k | R] with R a multiset
    of d - k nonzero vectors.
    """
    return math.comb((1 << k) - 2 + (d - k), d - k) * math.comb(d, k)


def max_basis_subsets(k: int, d: int,
                      work_budget: int = DEFAULT_WORK_BUDGET) -> BasisSubsetMaximum:
    """Exhaustive maximum of the number of basis k-subsets over all
    families of d vectors in GF(2)^k (k x d matrices up to column order).

    The witness is the first maximizer in the canonical enumeration:
    identity columns first, the rest a non-decreasing multiset of nonzero
    vectors in packed integer order.

    Raises:
        ValueError: unless 1 <= k <= d.
        OutOfRegimeError: if the search would exceed work_budget.
    """
    if not 1 <= k <= d:
        raise ValueError("need 1 <= k <= d")
    size = _search_size(k, d)
    if size > work_budget:
        raise OutOfRegimeError(
            f"search size {size} for (k={k}, d={d}) exceeds budget {work_budget}")
    table = _independent_subset_table(k) if k <= 4 else None
    identity = [1 << i for i in range(k)]
    index_sets = list(itertools.combinations(range(d), k))
    best = -1
    best_cols: tuple[int, ...] = ()
    for rest in itertools.combinations_with_replacement(range(1, 1 << k), d - k):
        cols = identity + list(rest)
        count = 0
        for idx in index_sets:
            values = [cols[i] for i in idx]
            if len(set(values)) < k:
                continue
            if table is not None:
                if tuple(sorted(values)) in table:
                    count += 1
            elif rank_ints(values) == k:
                count += 1
        if count > best:
            best = count
            best_cols = tuple(cols)
    return BasisSubsetMaximum(k, d, best, GF2Matrix(k, best_cols))


def basis_subset_bounds(k: int, d: int,
                        work_budget: int = DEFAULT_WORK_BUDGET) -> BasisSubsetBounds:
    """Bounds on the basis-subset maximum computable without the full
    search at (k, d)."""
    if not 1 <= k <= d:
        raise ValueError("need 1 <= k <= d")
    p = uniform_basis_probability(k)
    expected = p * math.comb(d, k)
    random_lower = -((-expected.numerator) // expected.denominator)

    dense_upper = None
    if d >= k * k:
        dense = p * Fraction(d ** k, math.factorial(k))
        dense_upper = dense.numerator // dense.denominator

    deletion_upper = None
    if k >= 2 and _search_size(k - 1, d - 1) <= work_budget:
        smaller = max_basis_subsets(k - 1, d - 1, work_budget).value
        deletion_upper = (d * smaller) // k

    monotone_upper = None
    best_d = max((dd for dd in range(k, d + 1)
                  if _search_size(k, dd) <= work_budget), default=None)
    if best_d is not None:
        value = max_basis_subsets(k, best_d, work_budget).value
        scaled = Fraction(value * math.comb(d, k), math.comb(best_d, k))
        monotone_upper = scaled.numerator // scaled.denominator

    return BasisSubsetBounds(k, d, random_lower, monotone_upper,
                             dense_upper, deletion_upper)


@dataclass(frozen=True)
class ShapeMaximum:
    d: int
    value: int
    best_k: int


def max_basis_subsets_any_k(d: int) -> ShapeMaximum:
    """max_k of the basis-subset maximum at fixed d.  By orthogonal
    complement duality the range k <= d/2 suffices; on ties the smallest
    k is reported.

    Raises:
        OutOfRegimeError: for d > 8.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    if d > 8:
        raise OutOfRegimeError("exhaustive shape maximum supported for d <= 8")
    best_value = -1
    best_k = 0
    for k in range(1, max(1, d // 2) + 1):
        value = max_basis_subsets(k, d).value
        if value > best_value:
            best_value = value
            best_k = k
    return ShapeMaximum(d, best_value, best_k)


@dataclass(frozen=True)
class PartitionMaximum:
    """Maximum of sum_i prod_{j != i} a_j over partitions d = a_1 + ...
    + a_m with m >= 2 parts >= 0.  Parts are reported non-increasing;
    at most one zero part ever matters (two zeros kill every term)."""

    d: int
    value: int
    parts: tuple[int, ...]


def _partitions_desc(d: int):
    """Partitions of d into positive non-increasing parts."""
    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for a in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - a, a, prefix + (a,))
    yield from rec(d, d, ())


def max_partition_product_sum(d: int) -> PartitionMaximum:
    """Exhaustive partition search for the sum-of-products maximum.

    Ties break to the lexicographically largest part tuple, so 2 + 0
    beats 1 + 1 at d = 2.

    Raises:
        ValueError: outside 1 <= d <= 60.
    """
    if not 1 <= d <= 60:
        raise ValueError("need 1 <= d <= 60")
    best = -1
    best_parts: tuple[int, ...] = ()
    for parts in _partitions_desc(d):
        prod = 1
        for a in parts:
            prod *= a
        if len(parts) >= 2:
            value = sum(prod // a for a in parts)
            if value > best or (value == best and parts > best_parts):
                best, best_parts = value, parts
        # same parts plus a single zero part: only the full product survives
        with_zero = parts + (0,)
        if prod > best or (prod == best and with_zero > best_parts):
            best, best_parts = prod, with_zero
    return PartitionMaximum(d, best, best_parts)


def product_partition_lower_bound(d: int) -> int:
    """Known lower bound on the list size: the maximum-product partition
    value (powers of 3 with a 2 or 4 correction) plus a parity term that
    is 1 exactly when ceil(d/3) is even.  At d = 1 the trivial bound 1 is
    returned; the closed form starts at d = 2."""
    if d < 1:
        raise ValueError("need d >= 1")
    if d == 1:
        return 1
    r = d % 3
    if r == 0:
        t3 = 3 ** (d // 3)
    elif r == 1:
        t3 = 4 * 3 ** ((d - 4) // 3)
    else:
        t3 = 2 * 3 ** ((d - 2) // 3)
    t2 = 1 if (-(-d // 3)) % 2 == 0 else 0
    return t2 + t3


@dataclass(frozen=True)
class ListSizeBoundsRow:
    d: int
    product_partition_lower: int
    partition_sum_lower: int
    construction_upper: Optional[int]


def list_size_bounds_table(d_max: int) -> list[ListSizeBoundsRow]:
    """Per-dimension lower and upper bounds on the minimum list size that
    still admits positive-density codes.  The upper column is the shape
    maximum of the basis-subset search, available for d <= 8."""
    if not 1 <= d_max <= 10:
        raise ValueError("need 1 <= d_max <= 10")
    rows = []
    for d in range(1, d_max + 1):
        upper = max_basis_subsets_any_k(d).value if d <= 8 else None
        rows.append(ListSizeBoundsRow(
            d,
            product_partition_lower_bound(d),
            max_partition_product_sum(d).value,
            upper))
    return rows


@dataclass(frozen=True)
class PartitionGrowthCheck:
    d: int
    value: int
    closed_form: Fraction
    meets_closed_form: bool
    all_threes_value: int
    all_threes_attains: bool


def partition_growth_check(d: int) -> PartitionGrowthCheck:
    """For d divisible by 3: does the partition maximum reach
    d * 3^((d-6)/3), and does the all-threes partition attain it?

    The all-threes partition is not always the argmax (mixed parts win at
    every checked d), so both facts are reported rather than assumed.
    """
    if d % 3 != 0 or not 3 <= d <= 60:
        raise ValueError("need d divisible by 3 in [3, 60]")
    result = max_partition_product_sum(d)
    closed = d * Fraction(3) ** ((d - 6) // 3)
    m = d // 3
    all_threes = m * 3 ** (m - 1)
    return PartitionGrowthCheck(
        d, result.value, closed,
        result.value >= closed,
        all_threes,
        result.value == all_threes)
