"""Machine verification of sequence identities, the counting bijection, and
the odd-gap dominance ratio.

All pass/fail decisions compare exact integers or exact rationals; decimal
strings are produced only for rendering, never for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .recurrences import (
    fibonacci_seq,
    gen_fib_seq,
    gen_h_seq,
    h_seq,
    min_size_odd_gap_seq,
)
from .subsets import (
    DEFAULT_ENUM_LIMIT,
    GAP_ALL_ODD,
    Condition,
    Subset,
    count_subsets,
    enumerate_subsets,
    is_alpha_schreier,
    is_beta_zeckendorf,
)


@dataclass(frozen=True)
class IdentityReport:
    """Result of sweeping one identity over an index interval.

    first_counterexample is (index, lhs, rhs) for the earliest mismatch;
    passed is true exactly when it is absent.
    """

    identity_id: str
    range_checked: tuple[int, int]
    passed: bool
    first_counterexample: tuple | None = None

    def __post_init__(self) -> None:
        if self.passed != (self.first_counterexample is None):
            raise ValueError("passed must mirror the absence of a counterexample")


class RatioSample(NamedTuple):
    n: int
    value: Fraction
    decimal: str


@dataclass(frozen=True)
class ConvergenceReport:
    """Exact odd-gap share r_n = |odd-gap families| / |either-parity families|
    per n, with rendered decimals and the final gap 1 - r_{n_max}."""

    samples: tuple[RatioSample, ...]
    final_gap_exact: Fraction
    final_gap: str


def scan_identity(
    identity_id: str, bounds: tuple[int, int], triples: Iterable[tuple]
) -> IdentityReport:
    """Fold (index, lhs, rhs) triples into a report, stopping at the first
    mismatch."""
    for index, lhs, rhs in triples:
        if lhs != rhs:
            return IdentityReport(identity_id, bounds, False, (index, lhs, rhs))
    return IdentityReport(identity_id, bounds, True)


def decimal_string(value: Fraction | int, sig_digits: int = 12) -> str:
    """Plain decimal rendering of an exact rational, never scientific.

    Rounds half away from zero at sig_digits significant digits and trims
    trailing fractional zeros, so the text is a faithful prefix of the value.
    """
    value = Fraction(value)
    if value == 0:
        return "0"
    sign = "-" if value < 0 else ""
    num, den = abs(value.numerator), value.denominator
    exp = len(str(num)) - len(str(den))  # near floor(log10), then correct it
    while _cmp_pow10(num, den, exp) < 0:
        exp -= 1
    while _cmp_pow10(num, den, exp + 1) >= 0:
        exp += 1
    shift = sig_digits - 1 - exp
    if shift >= 0:
        q, r = divmod(num * 10**shift, den)
    else:
        q, r = divmod(num, den * 10**-shift)
        r = Fraction(r, 10**-shift)
    if 2 * r >= den:
        q += 1
    digits = str(q)
    if len(digits) > sig_digits:  # rounding carried into a new leading digit
        digits = digits[:-1]
        exp += 1
    if exp >= 0:
        whole = digits[: exp + 1].ljust(exp + 1, "0")
        frac = digits[exp + 1:].rstrip("0")
        return sign + whole + ("." + frac if frac else "")
    frac = ("0" * (-exp - 1) + digits).rstrip("0")
    return sign + "0." + (frac if frac else "0")


def _cmp_pow10(num: int, den: int, exp: int) -> int:
    # sign of num/den - 10**exp without leaving the integers
    lhs, rhs = (num, den * 10**exp) if exp >= 0 else (num * 10**-exp, den)
    return (lhs > rhs) - (lhs < rhs)


def check_fib_h(n_max: int) -> IdentityReport:
    """Fibonacci shifted four ahead equals the twice-accumulated sequence
    plus n + 3, exactly, for n = 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    fib = fibonacci_seq(n_max + 4)
    acc = h_seq(n_max)
    triples = (
        (n, fib.term(n + 4), acc.term(n) + n + 3) for n in range(n_max + 1)
    )
    return scan_identity("fib-h", (0, n_max), triples)


def check_gen_sum(n: int, k_max: int) -> IdentityReport:
    """Front sums of the order-n family telescope: the sum of terms 0..k+1
    equals term k+1+n minus one, for k = 0..k_max."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    w = gen_fib_seq(n, k_max + 1 + n)

    def triples():
        running = w.term(0) + w.term(1)
        for k in range(k_max + 1):
            yield (k, running, w.term(k + 1 + n) - 1)
            if k + 2 <= w.last_index:
                running += w.term(k + 2)

    return scan_identity(f"gen-sum[n={n}]", (0, k_max), triples())


def check_gen_shift(n: int, m_max: int) -> IdentityReport:
    """The order-n family shifted 2n ahead equals its twice-accumulated
    form plus m + (n + 1), for m = 0..m_max."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    w = gen_fib_seq(n, m_max + 2 * n)
    acc = gen_h_seq(n, m_max)
    triples = (
        (m, w.term(m + 2 * n), acc.term(m) + m + n + 1) for m in range(m_max + 1)
    )
    return scan_identity(f"gen-shift[n={n}]", (0, m_max), triples)


def check_odd_gap_h(
    n_max_oracle: int, n_max_dp: int, limit: int = DEFAULT_ENUM_LIMIT
) -> IdentityReport:
    """Subsets of {1..n} with >= 2 elements and all-odd gaps are counted by
    the twice-accumulated Fibonacci value at n - 1.

    The exhaustive oracle carries the check to n_max_oracle; the DP carries
    it to n_max_dp.
    """
    if n_max_oracle < 1 or n_max_dp < 1:
        raise ValueError("ranges must be >= 1")
    hi = max(n_max_oracle, n_max_dp)
    acc = h_seq(hi - 1)
    cond = Condition(gap_parity=GAP_ALL_ODD, min_size=2)
    dp = min_size_odd_gap_seq(n_max_dp, 2)

    def triples():
        for n in range(1, n_max_oracle + 1):
            yield (n, count_subsets(n, cond, limit), acc.term(n - 1))
        for n in range(1, n_max_dp + 1):
            yield (n, dp.term(n), acc.term(n - 1))

    return scan_identity("oddgap-h", (1, hi), triples())


def _require_member(s: Subset, alpha: int, beta: int, role: str) -> None:
    if not is_alpha_schreier(s, alpha):
        raise ValueError(f"{role} must be {alpha}-Schreier: {s.elements}")
    if not is_beta_zeckendorf(s, beta):
        raise ValueError(f"{role} must be {beta}-Zeckendorf: {s.elements}")


def drop_max_shift_down(s: Subset, n: int, alpha: int, beta: int) -> Subset:
    """Forward half of the counting bijection: remove the maximum n, then
    shift everything down by alpha.

    Input must satisfy both predicates and contain n as its maximum; the
    image satisfies both predicates inside {1 .. n-(alpha+beta)}.
    """
    if s.maximum != n:
        raise ValueError(f"subset must have maximum exactly n={n}: {s.elements}")
    _require_member(s, alpha, beta, "input")
    return Subset(e - alpha for e in s.elements[:-1])


def shift_up_adjoin_max(s: Subset, n: int, alpha: int, beta: int) -> Subset:
    """Inverse half of the counting bijection: shift up by alpha and adjoin
    n as the new maximum.

    Input must satisfy both predicates inside {1 .. n-(alpha+beta)}; the
    image satisfies both predicates and has maximum exactly n.
    """
    bound = n - (alpha + beta)
    if s.elements and s.elements[-1] > bound:
        raise ValueError(
            f"subset must live in {{1..{bound}}} for n={n}: {s.elements}"
        )
    _require_member(s, alpha, beta, "input")
    return Subset(tuple(e + alpha for e in s.elements) + (n,))


def check_bijection_round_trip(
    alpha: int, beta: int, n_max: int, limit: int = DEFAULT_ENUM_LIMIT
) -> IdentityReport:
    """Round-trip both bijection halves over every enumerated family member
    and compare family sizes, for each ambient n up to n_max.

    Per n, two triples are scanned: (n, failures, 0) counting members that
    fail to round-trip or whose image leaves the target family, and
    (n, |with max n|, |shrunken ambient|) for equinumerosity.
    """
    lag = alpha + beta

    def triples():
        for n in range(lag, n_max + 1):
            with_max = list(
                enumerate_subsets(
                    n, Condition(alpha=alpha, beta=beta, forced_max=n), limit
                )
            )
            shrunken = list(
                enumerate_subsets(n - lag, Condition(alpha=alpha, beta=beta), limit)
            )
            failures = 0
            for s in with_max:
                image = drop_max_shift_down(s, n, alpha, beta)
                if not (
                    is_alpha_schreier(image, alpha)
                    and is_beta_zeckendorf(image, beta)
                    and (image.maximum or 0) <= n - lag
                    and shift_up_adjoin_max(image, n, alpha, beta) == s
                ):
                    failures += 1
            for s in shrunken:
                image = shift_up_adjoin_max(s, n, alpha, beta)
                if not (
                    image.maximum == n
                    and is_alpha_schreier(image, alpha)
                    and is_beta_zeckendorf(image, beta)
                    and drop_max_shift_down(image, n, alpha, beta) == s
                ):
                    failures += 1
            yield (n, failures, 0)
            yield (n, len(with_max), len(shrunken))

    return scan_identity(
        f"bijection[alpha={alpha},beta={beta}]", (lag, n_max), triples()
    )


def odd_gap_family_size(n: int) -> int:
    """Subsets of {1..n} whose gaps are all odd (closed form)."""
    fib = fibonacci_seq(n + 3)
    return fib.term(n + 3) - 1


def even_gap_family_size(n: int) -> int:
    """Subsets of {1..n} whose gaps are all even (closed form)."""
    if n % 2 == 1:
        return 3 * (1 << ((n - 1) // 2)) - 1
    return 2 * (1 << (n // 2)) - 1


def either_parity_family_size(n: int) -> int:
    """Subsets of {1..n} whose gaps are all odd or all even.

    Inclusion-exclusion: the two families overlap exactly in the n + 1
    subsets of size <= 1, whose gap list is empty.
    """
    return odd_gap_family_size(n) + even_gap_family_size(n) - (n + 1)


def even_to_odd_ratio(n: int) -> Fraction:
    """Share of the all-even-gap family relative to the all-odd-gap family.

    This quotient vanishes as n grows: the even-gap family doubles only
    every other step while the odd-gap family grows by the golden ratio.
    """
    return Fraction(even_gap_family_size(n), odd_gap_family_size(n))


def ratio_report(n_max: int) -> ConvergenceReport:
    """Exact odd-gap share r_n for n = 1..n_max.

    r_n tends to 1: almost every subset with single-parity gaps has all-odd
    gaps. All arithmetic is on exact integers and rationals.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    fib = fibonacci_seq(n_max + 3)
    samples = []
    for n in range(1, n_max + 1):
        odd_total = fib.term(n + 3) - 1
        union = odd_total + even_gap_family_size(n) - (n + 1)
        r = Fraction(odd_total, union)
        samples.append(RatioSample(n, r, decimal_string(r)))
    gap = 1 - samples[-1].value
    return ConvergenceReport(tuple(samples), gap, decimal_string(gap))
