"""Subset domain types, gap predicates, and the exhaustive enumeration oracle.

Everything here is pure and exact: subsets are immutable, counts are plain
Python ints (arbitrary precision), and enumeration order is deterministic.
The brute-force scan over all 2**n subsets is the ground truth that every
closed form and recurrence in the rest of the package is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

# Counts are exact and unbounded; Python ints never saturate or wrap.
BigCount = int

# Consecutive-gap list of a sorted subset; empty for subsets of size <= 1.
GapList = tuple[int, ...]

GAP_ANY = "any"
GAP_ALL_ODD = "all_odd"
GAP_ALL_EVEN = "all_even"
GAP_PARITIES = (GAP_ANY, GAP_ALL_ODD, GAP_ALL_EVEN)

# 2**n work beyond this is refused unless the caller raises the limit.
DEFAULT_ENUM_LIMIT = 30


class EnumerationLimitError(ValueError):
    """An exhaustive 2**n scan would exceed the configured limit."""


@dataclass(frozen=True, init=False)
class Subset:
    """A finite set of naturals >= 1, stored strictly increasing."""

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int] = ()) -> None:
        elems = tuple(sorted(elements))
        for e in elems:
            if e < 1:
                raise ValueError(f"subset elements must be >= 1, got {e!r}")
        for a, b in zip(elems, elems[1:]):
            if a == b:
                raise ValueError(f"duplicate element {a} in subset")
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, value: object) -> bool:
        return value in self.elements

    @property
    def minimum(self) -> int | None:
        return self.elements[0] if self.elements else None

    @property
    def maximum(self) -> int | None:
        return self.elements[-1] if self.elements else None


@dataclass(frozen=True)
class Condition:
    """Conjunction of subset predicates; absent fields impose nothing.

    gap_parity constrains every consecutive gap; forced_max, when present,
    requires the subset to contain exactly that maximum.
    """

    alpha: int | None = None
    beta: int | None = None
    gap_parity: str = GAP_ANY
    min_size: int = 0
    forced_max: int | None = None

    def __post_init__(self) -> None:
        if self.alpha is not None and self.alpha < 1:
            raise ValueError("alpha must be >= 1 when present")
        if self.beta is not None and self.beta < 1:
            raise ValueError("beta must be >= 1 when present")
        if self.gap_parity not in GAP_PARITIES:
            raise ValueError(f"gap_parity must be one of {GAP_PARITIES}")
        if self.min_size < 0:
            raise ValueError("min_size must be >= 0")
        if self.forced_max is not None and self.forced_max < 1:
            raise ValueError("forced_max must be >= 1 when present")


def difference_set(s: Subset) -> GapList:
    """Consecutive gaps of s, in order; empty when s has <= 1 element."""
    e = s.elements
    return tuple(b - a for a, b in zip(e, e[1:]))


def is_alpha_schreier(s: Subset, alpha: int) -> bool:
    """True iff s is empty or min(s) >= alpha * |s|.

    Pure integer comparison, equivalent to the rational test
    min(s) / alpha >= |s|.
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    return not s.elements or s.elements[0] >= alpha * len(s.elements)


def is_beta_zeckendorf(s: Subset, beta: int) -> bool:
    """True iff every consecutive gap of s is >= beta.

    Subsets with at most one element satisfy this vacuously.
    """
    if beta < 1:
        raise ValueError("beta must be >= 1")
    gaps = difference_set(s)
    return not gaps or min(gaps) >= beta


def _passes(elems: tuple, cond: Condition) -> bool:
    # Hot path shared by matches/count/enumerate; elems must be sorted.
    k = len(elems)
    if k < cond.min_size:
        return False
    if cond.forced_max is not None and (k == 0 or elems[-1] != cond.forced_max):
        return False
    if cond.alpha is not None and k > 0 and elems[0] < cond.alpha * k:
        return False
    beta = cond.beta
    parity = cond.gap_parity
    if k >= 2 and (beta is not None or parity != GAP_ANY):
        want = 1 if parity == GAP_ALL_ODD else 0 if parity == GAP_ALL_EVEN else None
        prev = elems[0]
        for e in elems[1:]:
            g = e - prev
            prev = e
            if beta is not None and g < beta:
                return False
            if want is not None and g & 1 != want:
                return False
    return True


def matches(s: Subset, cond: Condition, n: int) -> bool:
    """True iff s, as a subset of {1..n}, satisfies every present clause."""
    if s.elements and s.elements[-1] > n:
        raise ValueError(f"malformed query: subset element {s.elements[-1]} exceeds n={n}")
    if cond.forced_max is not None and cond.forced_max > n:
        raise ValueError(f"malformed query: forced_max {cond.forced_max} exceeds n={n}")
    return _passes(s.elements, cond)


def _check_enum_bounds(n: int, cond: Condition, limit: int) -> None:
    if n < 0:
        raise ValueError("n must be >= 0")
    if cond.forced_max is not None and cond.forced_max > n:
        raise ValueError(f"malformed query: forced_max {cond.forced_max} exceeds n={n}")
    if n > limit:
        raise EnumerationLimitError(
            f"n={n} exceeds the exhaustive-enumeration limit {limit}"
        )


def count_subsets(n: int, cond: Condition, limit: int = DEFAULT_ENUM_LIMIT) -> BigCount:
    """Exact number of subsets of {1..n} satisfying cond, by brute force.

    Scans every cardinality class of the power set; refuses n > limit
    because the work is O(2**n).
    """
    _check_enum_bounds(n, cond, limit)
    universe = range(1, n + 1)
    total = 0
    for k in range(n + 1):
        for elems in combinations(universe, k):
            if _passes(elems, cond):
                total += 1
    return total


def enumerate_subsets(
    n: int, cond: Condition, limit: int = DEFAULT_ENUM_LIMIT
) -> Iterator[Subset]:
    """Yield each matching subset of {1..n} exactly once.

    Order is by characteristic vector read as an n-bit integer (bit i-1 set
    iff element i present), in increasing numeric order, so output is
    reproducible byte for byte.
    """
    _check_enum_bounds(n, cond, limit)

    def gen() -> Iterator[Subset]:
        for mask in range(1 << n):
            elems = []
            m = mask
            i = 1
            while m:
                if m & 1:
                    elems.append(i)
                m >>= 1
                i += 1
            t = tuple(elems)
            if _passes(t, cond):
                yield Subset(t)

    return gen()
