"""k-abelian powers in rotation codings and the spectra they generate.

The maximal exponent of a k-abelian power of period m is read off the
coarse interval family: a run of n period-m steps stays equivalent exactly
when the n points x, x+m*alpha, ... share a coarse interval, so the count
is floor(longest interval / dist(m*alpha)) plus one unless the two are
exactly equal.  A slow enumerator over actual factors double-checks this
on demand, under an explicit symbol budget.

Scaling the maximal exponent at convergent denominators by the denominator
converges; the limit factors as (longest level-(2k-2) interval) times the
Lagrange constant of the slope, which is what theta_k computes exactly.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .cf import ContinuedFraction
from .geometry import (
    EndpointConvention,
    LEFT_CLOSED,
    family_extremes,
    ikm_intervals,
    level_intervals,
)
from .kabelian import signature
from .quadreal import QuadReal, dist_to_int
from .words import SturmianSpec, factors_of_length, sturmian_prefix

__all__ = [
    "ORACLE_CAP_ENV",
    "DEFAULT_ORACLE_CAP",
    "FREIMAN_CONSTANT",
    "ResourceCapExceeded",
    "ExponentRecord",
    "max_kab_exponent",
    "brute_kab_exponent",
    "BoundReport",
    "exponent_bound_check",
    "theta_k",
    "LimsupEstimate",
    "theta_limsup_estimate",
    "SpectrumPoint",
    "preperiod_pool",
    "sample_spectrum",
    "max_integer_power_exponent",
    "LinftyStage",
    "LinftyReport",
    "construct_linfty_slope",
]

ORACLE_CAP_ENV = "STURMIAN_SPECTRA_CAP"
DEFAULT_ORACLE_CAP = 2000

# Right endpoint of the half-line where the classical spectrum is a full ray.
# Documented for orientation only; nothing below depends on it.
FREIMAN_CONSTANT = QuadReal(2221564096, 283748, 462, 491993569)


class ResourceCapExceeded(RuntimeError):
    """The enumeration oracle would exceed its symbol budget."""

    def __init__(self, needed: int, cap: int):
        super().__init__(
            f"enumeration would need factors of length {needed}, cap is {cap}"
        )
        self.needed = needed
        self.cap = cap


def _oracle_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(ORACLE_CAP_ENV)
    return int(env) if env else DEFAULT_ORACLE_CAP


@dataclass(frozen=True)
class ExponentRecord:
    k: int
    m: int
    exponent: int
    max_interval_length: QuadReal
    step: QuadReal
    witness_intercept: QuadReal | None = None
    witness: str | None = None


def max_kab_exponent(
    alpha: QuadReal,
    k: int,
    m: int,
    convention: EndpointConvention = LEFT_CLOSED,
    with_witness: bool = True,
    witness_cap: int | None = None,
) -> ExponentRecord:
    """Largest n such that some factor is a k-abelian n-th power of period m.

    Exact: floor(longest coarse interval / dist(m*alpha)), plus one unless
    the ratio's numerator and denominator coincide exactly.  The witness,
    when requested and within the cap, is an intercept placed inside the
    longest interval so that all n period-m steps stay inside it, together
    with the coded word of length n*m.
    """
    fam = ikm_intervals(alpha, k, m, convention)
    step = dist_to_int(m * alpha)
    longest = fam.max_length()
    exponent = (longest / step).floor()
    if longest != step:
        exponent += 1
    record = ExponentRecord(k, m, exponent, longest, step)
    if not with_witness or exponent * m > _oracle_cap(witness_cap):
        return record
    idx = max(range(len(fam.intervals)), key=lambda i: fam.intervals[i].length)
    iv = fam.intervals[idx]
    slack = iv.length - (exponent - 1) * step
    x = iv.start + slack / 2
    if (m * alpha).frac() > Fraction(1, 2):
        # successive period-m steps drift downward; anchor near the top
        x = x + (exponent - 1) * step
    x = x.frac()
    word = sturmian_prefix(SturmianSpec(alpha, x, convention), exponent * m)
    return ExponentRecord(k, m, exponent, longest, step, x, word)


def _initial_run(word: str, m: int, key) -> int:
    """Number of leading m-blocks of `word` all equivalent to the first."""
    first = key(word[:m])
    n = 1
    pos = m
    while pos + m <= len(word) and key(word[pos : pos + m]) == first:
        n += 1
        pos += m
    return n


def _longest_block_run(
    alpha: QuadReal,
    m: int,
    key,
    convention: EndpointConvention,
    cap: int,
) -> int:
    """Max n with a factor of length n*m whose m-blocks all share `key`.

    Enumerates complete factor languages of increasing length; every factor
    of length n*m is a prefix of some enumerated factor, so initial block
    runs see every power.  Certification that no longer power exists needs
    the language at length (n+1)*m, hence the growth loop and the cap.
    """
    if 2 * m > cap:
        raise ResourceCapExceeded(2 * m, cap)
    # Shared ladder of lengths (powers of two up to the cap) so repeated
    # calls with different periods reuse the cached factor languages.
    length = 64
    while length < 4 * m and length < cap:
        length *= 2
    length = min(length, cap)
    while True:
        best = 1
        for w, _ in factors_of_length(alpha, length, convention):
            run = _initial_run(w, m, key)
            if run > best:
                best = run
        if (best + 1) * m <= length:
            return best
        if length >= cap:
            raise ResourceCapExceeded((best + 1) * m, cap)
        length = min(cap, length * 2)


def brute_kab_exponent(
    alpha: QuadReal,
    k: int,
    m: int,
    convention: EndpointConvention = LEFT_CLOSED,
    cap: int | None = None,
) -> int:
    """Independent check of max_kab_exponent by enumerating actual factors.

    No interval-length reasoning: splits enumerated factors into m-blocks
    and tests pairwise equivalence via signatures.  Raises
    ResourceCapExceeded (a declared failure, never a wrong answer) if the
    needed factor length passes the cap, env-overridable via
    STURMIAN_SPECTRA_CAP.
    """
    return _longest_block_run(
        alpha, m, lambda b: signature(b, k), convention, _oracle_cap(cap)
    )


def max_integer_power_exponent(
    cf: ContinuedFraction, m: int, cap: int | None = None
) -> int:
    """Largest n with a literal n-th power of period m among the factors.

    At convergent denominators q_t with t > 1 this is a_{t+1} + 2; other
    periods fall back to enumeration (they never reach 3 in practice, but
    the fallback double-checks rather than assumes).
    """
    if cf.is_rational:
        raise ValueError("slope must be irrational")
    if m < 1:
        raise ValueError("period must be >= 1")
    q_prev, q_cur = 0, 1  # q_{-1}, q_0
    t = 0
    while q_cur <= m:
        if q_cur == m and t > 1:
            return cf.partial_quotient(t + 1) + 2
        t += 1
        q_prev, q_cur = q_cur, cf.partial_quotient(t) * q_cur + q_prev
    alpha = cf.value()
    return _longest_block_run(alpha, m, lambda b: b, LEFT_CLOSED, _oracle_cap(cap))


@dataclass
class BoundReport:
    k: int
    t_checked: list[int]
    convergent_slack_violations: list[tuple[int, int]]
    approx_window_violations: list[int]
    k1_monotone_violations: list[tuple[int, int]]
    # informational: where the conjectured tighter +1 slack would fail
    improved_slack_exceedances: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not (
            self.convergent_slack_violations or self.approx_window_violations
        )


def exponent_bound_check(
    cf: ContinuedFraction, k: int, t_range: Iterable[int]
) -> BoundReport:
    """Check exponent bounds along convergent denominators.

    For each t in t_range with dist(q_t * alpha) below the shortest
    level-(2k-2) interval:

    * every period m < q_{t+1} satisfies A(m) <= A(q_t) + 2;
    * every m < q_{t+1} with dist(m * alpha) below that shortest length
      satisfies -1 <= A(m) - floor(longest / dist(m * alpha)) <= 2,
      where longest is the longest level-(2k-2) interval.

    The +2 side of the window is sharp, so a symmetric +/-1 window would
    be wrong: the class family's longest interval can exceed the level
    family's by up to dist(m * alpha), and an exact-tie bump adds one
    more.  Both excesses are realized together, e.g. at m = 11 for the
    slope of the Fibonacci word with k = 2, and even at convergent
    denominators (m = 4 for [0; 3, 1, 1, 1, 100, (1)] with k = 2, where
    A = 6 against floor(longest / dist) = 4 - confirmed by brute-force
    scanning of the word itself).

    For k = 1 the stronger A(m) < A(q_t) for m < q_t is recorded as well,
    informationally (it does not affect `ok`).
    """
    alpha = cf.value()
    lam_fam = level_intervals(alpha, 2 * k - 2)
    shortest, longest = family_extremes(lam_fam)
    ts = sorted(set(t_range))
    if not ts or min(ts) < 0:
        raise ValueError("t_range must be nonempty with t >= 0")
    convs = cf.convergents(max(ts) + 1)
    report = BoundReport(k, [], [], [], [], [])
    memo: dict[int, int] = {}

    def exponent(m: int) -> int:
        if m not in memo:
            memo[m] = max_kab_exponent(alpha, k, m, with_witness=False).exponent
        return memo[m]

    for t in ts:
        q_t = convs[t].q
        if dist_to_int(q_t * alpha) >= shortest:
            continue
        report.t_checked.append(t)
        a_qt = exponent(q_t)
        bound = a_qt + 2
        for m in range(1, convs[t + 1].q):
            a_m = exponent(m)
            if a_m > bound:
                report.convergent_slack_violations.append((t, m))
            elif a_m == bound:
                report.improved_slack_exceedances.append((t, m))
            step = dist_to_int(m * alpha)
            if step < shortest:
                diff = a_m - (longest / step).floor()
                if not -1 <= diff <= 2 and m not in report.approx_window_violations:
                    report.approx_window_violations.append(m)
            if k == 1 and m < q_t and a_m >= a_qt:
                report.k1_monotone_violations.append((t, m))
    return report


def theta_k(cf: ContinuedFraction, k: int) -> QuadReal:
    """Exact limsup of A_k(q_t)/q_t: longest level-(2k-2) interval times
    the Lagrange constant of the slope."""
    if k < 1:
        raise ValueError("order k must be >= 1")
    alpha = cf.value()
    longest = level_intervals(alpha, 2 * k - 2).max_length()
    return longest * cf.lagrange_constant()


@dataclass(frozen=True)
class LimsupEstimate:
    k: int
    t_max: int
    window_start: int
    estimate: Fraction
    slack: Fraction
    terms: tuple[tuple[int, Fraction], ...]


def theta_limsup_estimate(
    cf: ContinuedFraction, k: int, t_max: int, window: int = 5
) -> LimsupEstimate:
    """Finite-stage rational estimate of theta_k.

    Computes A_k(q_t)/q_t for every convergent denominator q_t with
    t <= t_max and takes the max over the last `window` indices only.
    The ratios at small t routinely overshoot the limit (the +1 tie term
    and the family-vs-limit gap are both O(1/q_t)), so folding them into
    the max would freeze the estimate at an early spike; a tail max is
    the finite stand-in for a limit superior.  All terms are kept in the
    report, and the slack 2/q at the window start bounds the tail terms'
    deviation from the limit.
    """
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    if window < 1:
        raise ValueError("window must be >= 1")
    alpha = cf.value()
    convs = cf.convergents(t_max)
    terms = []
    for conv in convs[1:]:
        a = max_kab_exponent(alpha, k, conv.q, with_witness=False).exponent
        terms.append((conv.t, Fraction(a, conv.q)))
    window_start = max(1, t_max - window + 1)
    estimate = max(v for t, v in terms if t >= window_start)
    slack = Fraction(2, convs[window_start].q)
    return LimsupEstimate(k, t_max, window_start, estimate, slack, tuple(terms))


@dataclass(frozen=True)
class SpectrumPoint:
    cf: ContinuedFraction
    k: int
    theta: QuadReal


def preperiod_pool(count: int) -> Iterator[tuple[int, ...]]:
    """Deterministic enumeration of preperiod digit tuples: the empty tuple
    first, then pairs (c1, c2) in expanding square shells."""
    if count > 0:
        yield ()
    produced = 1
    shell = 1
    while produced < count:
        for c1 in range(1, shell + 1):
            if produced >= count:
                return
            yield (c1, shell)
            produced += 1
        for c2 in range(1, shell):
            if produced >= count:
                return
            yield (shell, c2)
            produced += 1
        shell += 1


def sample_spectrum(
    k: int,
    base: ContinuedFraction,
    pool: int | Iterable[tuple[int, ...]],
    workers: int = 0,
) -> list[SpectrumPoint]:
    """Exact theta_k values over slopes sharing base's periodic tail.

    The pool is either a count fed to preperiod_pool or an explicit
    iterable of preperiod digit tuples; duplicates after canonicalization
    are skipped, so a count yields that many distinct slopes (the base
    itself first).  Points are returned in enumeration order regardless of
    worker count.
    """
    if base.is_rational:
        raise ValueError("base slope must be irrational")
    if isinstance(pool, int):
        if pool < 0:
            raise ValueError("pool size must be >= 0")
        want = max(pool, 1)
        plans: Iterator[tuple[int, ...]] | list[tuple[int, ...]] = _distinct_variants(
            base, want
        )
    else:
        plans = [_variant(base, tuple(p)) for p in pool] or [base]
    cfs = list(plans)

    def point(cf: ContinuedFraction) -> SpectrumPoint:
        return SpectrumPoint(cf, k, theta_k(cf, k))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool_exec:
            return list(pool_exec.map(point, cfs))
    return [point(cf) for cf in cfs]


def _variant(base: ContinuedFraction, digits: tuple[int, ...]) -> ContinuedFraction:
    if not digits:
        return base
    return ContinuedFraction((base.preperiod[0],) + digits, base.period)


def _distinct_variants(base: ContinuedFraction, count: int) -> list[ContinuedFraction]:
    out: list[ContinuedFraction] = []
    seen: set[ContinuedFraction] = set()
    expand = 1
    while len(out) < count:
        for digits in preperiod_pool(count * expand):
            cf = _variant(base, digits)
            if cf not in seen:
                seen.add(cf)
                out.append(cf)
                if len(out) >= count:
                    break
        expand += 1
    return out


@dataclass(frozen=True)
class LinftyStage:
    t: int
    k: int
    q: int
    r: int
    s: int
    a_next: int
    ratio: Fraction
    error: Fraction
    bound: Fraction


@dataclass(frozen=True)
class LinftyReport:
    target: Fraction
    stages: tuple[LinftyStage, ...]
    quotients: tuple[int, ...]
    prefix: ContinuedFraction
    padding_ok: bool


def construct_linfty_slope(lam: Fraction | int | str, stages: int) -> LinftyReport:
    """Build a slope whose stage ratios (a+2)/q approach a positive rational.

    Stage t finds the least index k past the previous stage such that the
    best approximation r + s/q_k from below (0 <= s < q_k, greedy choice)
    sits within 2^-t of the target AND the resulting ratio
    (max(1, floor(target*q_k)) - 2 + 2)/q_k does too; it then plants
    a_{k+1} = max(1, floor(target*q_k) - 2) and pads with ones.  The ratio
    condition is part of the stage search because for small targets the
    clamped quotient can push the ratio outside the window at small q.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("target must be a positive rational")
    if stages < 1:
        raise ValueError("need at least one stage")
    quotients: list[int] = []  # position i holds a_{i+1}; padding value is 1
    stage_records: list[LinftyStage] = []
    prev_k = 1
    for t in range(1, stages + 1):
        bound = Fraction(1, 2**t)
        k = prev_k + 1
        while True:
            while len(quotients) < k + 1:
                quotients.append(1)
            q = _denominator(quotients, k)
            v_num = (lam.numerator * q) // lam.denominator  # floor(lam * q)
            err = lam - Fraction(v_num, q)
            a_next = max(1, v_num - 2)
            ratio = Fraction(a_next + 2, q)
            if err < bound and abs(lam - ratio) < bound:
                quotients[k] = a_next  # position k holds a_{k+1}
                stage_records.append(
                    LinftyStage(
                        t, k, q, v_num // q, v_num % q, a_next, ratio, abs(lam - ratio), bound
                    )
                )
                prev_k = k
                break
            k += 1
    picked = {rec.k for rec in stage_records}
    padding_ok = True
    threshold_seen = False
    for i in range(1, prev_k + 1):
        if i in picked:
            continue
        # position i holds a_{i+1}, so its window ratio is (a_{i+1} + 2) / q_i
        pad_ratio = Fraction(quotients[i] + 2, _denominator(quotients, i))
        if pad_ratio <= lam:
            threshold_seen = True
        elif threshold_seen:
            padding_ok = False
    prefix = ContinuedFraction([0] + quotients[: prev_k + 1])
    return LinftyReport(
        lam, tuple(stage_records), tuple(quotients[: prev_k + 1]), prefix, padding_ok
    )


def _denominator(quotients: Sequence[int], upto: int) -> int:
    """q_upto for the expansion [0; quotients[0], quotients[1], ...]."""
    q_prev, q_cur = 0, 1
    for a in quotients[:upto]:
        q_prev, q_cur = q_cur, a * q_cur + q_prev
    return q_cur
