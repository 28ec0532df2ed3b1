"""Frequency-table analysis of head placement: counts, tests, intervals.

Central quantities, per measurement unit of an order-frequency table:

* F       total frequency over all orders of the phrase
* g       frequency of orders placing the head first or last
* <D>     frequency-weighted average dependency-distance sum, tied to g by
          <D> = 2 + g/F (3-word star phrases) and <D> = 4 + 2 g/F (4-word)
* k       separation |<D> - mean| in units of sigma(<D>), for the 3-sigma rule

Binomial tails are accumulated in log space from a saddle-point log-pmf, so
p-values down at 1e-37 and far beyond keep full relative accuracy.
Frequencies stay exact :class:`~fractions.Fraction` values until a float is
actually reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .nullmodel import expected_D, sigma_mean_D
from .trees import (
    LinearArrangement,
    d_max_single_head,
    d_min_single_head,
    star,
    sum_dependency_distances,
)

Real = Union[int, float, Fraction]


@dataclass(frozen=True)
class OrderFrequencyTable:
    """Frequencies of the n! orders of an n-symbol phrase, per measurement unit.

    Symbols are single characters so that an order is a plain string (e.g.
    ``"nAND"``); order strings are case-sensitive. Orders absent from `rows`
    count as frequency zero. The alphabet is a set; it is stored sorted so
    that tables built from differently-ordered alphabets compare equal.
    """

    alphabet: tuple[str, ...]
    head: str
    units: tuple[str, ...]
    rows: dict[str, dict[str, Fraction]]

    def __post_init__(self) -> None:
        alphabet = tuple(sorted(self.alphabet))
        units = tuple(self.units)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "units", units)
        if len(set(alphabet)) != len(alphabet) or not alphabet:
            raise ValueError("alphabet must be a non-empty set of distinct symbols")
        if any(len(s) != 1 for s in alphabet):
            raise ValueError("category symbols must be single characters")
        if self.head not in alphabet:
            raise ValueError(f"head symbol {self.head!r} not in alphabet")
        if not units or len(set(units)) != len(units):
            raise ValueError("units must be non-empty and distinct")
        canon = sorted(alphabet)
        rows: dict[str, dict[str, Fraction]] = {}
        for order, freqs in self.rows.items():
            if sorted(order) != canon:
                raise ValueError(f"order {order!r} is not a permutation of the alphabet")
            clean: dict[str, Fraction] = {}
            for unit, value in freqs.items():
                if unit not in units:
                    raise ValueError(f"unknown unit {unit!r} in row {order!r}")
                value = Fraction(value)
                if value < 0:
                    raise ValueError(f"negative frequency for {order!r} / {unit!r}")
                clean[unit] = value
            rows[order] = clean
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.alphabet)

    def frequency(self, order: str, unit: str) -> Fraction:
        if unit not in self.units:
            raise ValueError(f"unknown unit {unit!r}")
        return self.rows.get(order, {}).get(unit, Fraction(0))


def p_head_at_ends(n: int) -> Fraction:
    """Probability 2/n that a uniformly random order puts the head at an end."""
    if n < 2:
        raise ValueError(f"phrase length must be >= 2, got {n}")
    return Fraction(2, n)


def total_frequency(table: OrderFrequencyTable, unit: str) -> Fraction:
    """F: the summed frequency over all orders, in the given unit."""
    if unit not in table.units:
        raise ValueError(f"unknown unit {unit!r}")
    return sum((freqs.get(unit, Fraction(0)) for freqs in table.rows.values()), Fraction(0))


def head_end_frequency(table: OrderFrequencyTable, unit: str) -> Fraction:
    """g: the summed frequency of orders whose head is first or last."""
    if unit not in table.units:
        raise ValueError(f"unknown unit {unit!r}")
    total = Fraction(0)
    for order, freqs in table.rows.items():
        if order[0] == table.head or order[-1] == table.head:
            total += freqs.get(unit, Fraction(0))
    return total


def mean_D_from_g(n: int, g: Real, F: Real) -> float:
    """<D> recovered from the head-end frequency for 3- or 4-word star phrases.

    With D two-valued ({2,3} resp. {4,6}), the frequency-weighted average is
    [D_min (F - g) + D_max g] / F, i.e. 2 + g/F for n=3 and 4 + 2 g/F for n=4.
    """
    if n not in (3, 4):
        raise ValueError(
            "the head-end bridge to <D> is only defined for 3- or 4-word phrases"
        )
    if F <= 0:
        raise ValueError(f"total frequency F must be positive, got {F}")
    if not 0 <= g <= F:
        raise ValueError(f"head-end frequency g={g} outside 0..F={F}")
    if isinstance(g, (int, Fraction)) and isinstance(F, (int, Fraction)):
        ratio: Real = Fraction(g, 1) / Fraction(F, 1)
    else:
        ratio = float(g) / float(F)
    if n == 3:
        return float(2 + ratio)
    return float(4 + 2 * ratio)


_HALF_LOG_TWO_PI = 0.5 * math.log(2 * math.pi)


def _stirlerr(m: int) -> float:
    """Stirling-series error log(m!) - [(m+1/2)log m - m + log sqrt(2 pi)].

    Direct evaluation below m=30 (the cancelling pieces are small enough),
    four series terms beyond (next term < 5e-17 there).
    """
    if m < 30:
        return math.lgamma(m + 1) - ((m + 0.5) * math.log(m) - m + _HALF_LOG_TWO_PI)
    mm = float(m * m)
    return (1 / 12.0 - (1 / 360.0 - (1 / 1260.0 - 1 / (1680.0 * mm)) / mm) / mm) / m


def _binomial_deviance(x: float, mean: float) -> float:
    """x log(x/mean) + mean - x, evaluated without cancellation near x = mean."""
    if abs(x - mean) < 0.1 * (x + mean):
        d = x - mean
        v = d / (x + mean)
        s = d * v
        correction = 2 * x * v
        v_squared = v * v
        j = 1
        while True:
            correction *= v_squared
            updated = s + correction / (2 * j + 1)
            if updated == s:
                return updated
            s = updated
            j += 1
    return x * math.log(x / mean) + mean - x


def binomial_log_pmf(k: int, n: int, p: Real) -> float:
    """log P(X = k) for X ~ Binomial(n, p).

    Saddle-point form (Stirling errors plus deviance terms), so the absolute
    error of the log stays near 1e-13 even for n = 10^4, where a plain
    lgamma-difference loses five digits to cancellation.
    """
    p = float(p)
    if not 0 < p < 1:
        raise ValueError(f"probability must be strictly between 0 and 1, got {p}")
    if not 0 <= k <= n:
        return -math.inf
    if k == 0:
        return n * math.log1p(-p)
    if k == n:
        return n * math.log(p)
    q = 1.0 - p
    exponent = (
        _stirlerr(n)
        - _stirlerr(k)
        - _stirlerr(n - k)
        - _binomial_deviance(k, n * p)
        - _binomial_deviance(n - k, n * q)
    )
    log_scale = math.log(2 * math.pi) + math.log(k) + math.log1p(-k / n)
    return exponent - 0.5 * log_scale


def binomial_pmf(k: int, n: int, p: Real) -> float:
    """P(X = k) for X ~ Binomial(n, p); exact to float rounding."""
    p = float(p)
    if p == 0.0:
        return 1.0 if k == 0 else 0.0
    if p == 1.0:
        return 1.0 if k == n else 0.0
    return math.exp(binomial_log_pmf(k, n, p))


def _validate_counts(successes: Real, trials: Real) -> tuple[int, int]:
    for name, value in (("trials", trials), ("successes", successes)):
        if int(value) != value:
            raise ValueError(f"{name} must be an integer, got {value}")
    successes, trials = int(successes), int(trials)
    if trials < 0 or not 0 <= successes <= trials:
        raise ValueError(f"need 0 <= successes <= trials, got {successes}/{trials}")
    return successes, trials


def right_binomial_test(successes: Real, trials: Real, p0: Real) -> float:
    """Exact right-tail P(X >= successes) for X ~ Binomial(trials, p0).

    Tail terms are accumulated in log space relative to the largest one, so
    the result keeps full relative accuracy however deep the tail, and only
    degrades to zero below the smallest representable float (~1e-308).
    """
    successes, trials = _validate_counts(successes, trials)
    p = float(p0)
    if not 0 < p < 1:
        raise ValueError(f"null probability must be strictly inside (0, 1), got {p0}")
    if successes == 0:
        return 1.0
    log_terms = [
        binomial_log_pmf(k, trials, p) for k in range(successes, trials + 1)
    ]
    peak = max(log_terms)
    if peak == -math.inf:
        return 0.0
    return math.exp(peak) * math.fsum(math.exp(t - peak) for t in log_terms)


def quad_binomial_test(
    g: Real, F: Real, p0: Real
) -> tuple[tuple[int, int, float], ...]:
    """Right-tail tests over the four floor/ceil integer transformations.

    Returns (trials, successes, p) for (floor F, floor g), (ceil F, floor g),
    (floor F, ceil g), (ceil F, ceil g), in that order. Integer inputs make
    all four identical. When F and g fall in the same unit interval, ceil g
    can exceed floor F; successes are clamped to trials in that degenerate
    combination.
    """
    if not 0 <= g <= F:
        raise ValueError(f"need 0 <= g <= F, got g={g}, F={F}")
    g_lo, g_hi = math.floor(g), math.ceil(g)
    F_lo, F_hi = math.floor(F), math.ceil(F)
    results = []
    for trials, successes in ((F_lo, g_lo), (F_hi, g_lo), (F_lo, g_hi), (F_hi, g_hi)):
        successes = min(successes, trials)
        results.append((trials, successes, right_binomial_test(successes, trials, p0)))
    return tuple(results)


def binomial_quantile(q: float, trials: int, p: Real) -> int:
    """Smallest x with P(X <= x) >= q for X ~ Binomial(trials, p).

    A 1e-12 relative tie tolerance absorbs float rounding where the true
    cumulative hits q exactly (e.g. the median of a symmetric binomial).
    """
    if not 0 < q < 1:
        raise ValueError(f"quantile level must be in (0, 1), got {q}")
    if trials < 0:
        raise ValueError(f"trials must be >= 0, got {trials}")
    p = float(p)
    if not 0 <= p <= 1:
        raise ValueError(f"probability must be in [0, 1], got {p}")
    if p == 0.0:
        return 0
    if p == 1.0:
        return trials
    bar = q * (1.0 - 1e-12)
    cumulative = 0.0
    for k in range(trials + 1):
        cumulative += binomial_pmf(k, trials, p)
        if cumulative >= bar:
            return k
    return trials  # float round-off kept the running sum a hair below q


def binomial_proportion_ci(
    proportion: float, F: Real, alpha: float = 0.05
) -> tuple[float, float]:
    """Quantile-inversion confidence interval for a binomial proportion.

    With Q the Binomial(F, proportion) quantile function, the interval is
    (Q(alpha/2)/F, Q(1 - alpha/2)/F). A non-integer F is rounded to the
    nearest integer (ties away from zero) first. Degenerate proportions 0 and
    1 return the point interval.
    """
    if not 0 <= proportion <= 1:
        raise ValueError(f"proportion must be in [0, 1], got {proportion}")
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    if F <= 0:
        raise ValueError(f"F must be positive, got {F}")
    trials = _round_half_away(F)
    if proportion == 0:
        return (0.0, 0.0)
    if proportion == 1:
        return (1.0, 1.0)
    lo = binomial_quantile(alpha / 2, trials, proportion) / trials
    hi = binomial_quantile(1 - alpha / 2, trials, proportion) / trials
    return (lo, hi)


def _round_half_away(x: Real) -> int:
    if isinstance(x, float):
        x = Fraction(x)
    if x < 0:
        return -_round_half_away(-x)
    return math.floor(Fraction(x) + Fraction(1, 2))


def sigma_separation_k(mean_D: float, F: Real, n: int) -> float:
    """Separation of <D> from its null mean, in units of sigma(<D>).

    k = |<D> - (n^2-1)/3| / (sigma_star(n)/sqrt(F)), where sigma_star(n) is
    the shuffling standard deviation of D for the n-word star: sqrt(1) for
    n=4 and sqrt(2/9) for n=3. Only the 3- and 4-word star phrases are
    supported, mirroring :func:`mean_D_from_g`.
    """
    if n not in (3, 4):
        raise ValueError("the sigma-separation statistic is defined for n in {3, 4}")
    if F <= 0:
        raise ValueError(f"total frequency F must be positive, got {F}")
    if n == 4:
        return math.sqrt(float(F)) * abs(mean_D - 5.0)
    return math.sqrt(float(F) * 4.5) * abs(mean_D - 8.0 / 3.0)


def three_sigma_verdict(k: float) -> bool:
    """True iff k >= 3, the (conservative) 3-sigma significance rule."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return k >= 3


def order_distance_sum(order: str, head: str) -> int:
    """D for a single-head phrase linearized as `order` (head governs the rest).

    Routed through the star tree and an explicit arrangement rather than the
    closed form, so it can serve as an independent cross-check of the
    head-end counting machinery.
    """
    if order.count(head) != 1:
        raise ValueError(f"order {order!r} must contain the head {head!r} exactly once")
    n = len(order)
    head_pos = order.index(head) + 1
    leaf_positions = [p for p in range(1, n + 1) if p != head_pos]
    vertex_order = [0] * n
    vertex_order[head_pos - 1] = 1  # vertex 1 is the hub
    for leaf, pos in enumerate(leaf_positions, start=2):
        vertex_order[pos - 1] = leaf
    arrangement = LinearArrangement.from_vertex_order(vertex_order)
    return sum_dependency_distances(star(n, hub=1), arrangement)


def anti_locality_counts(
    table: OrderFrequencyTable, unit: str
) -> tuple[Fraction, Fraction]:
    """(f_plus, f_minus): frequency of orders with D above / below the null mean.

    For star phrases with integer frequencies, f_plus coincides with the
    head-end frequency g, which makes the anti-locality test and the head-end
    test the same binomial test.
    """
    d_random = expected_D(table.n)
    f_plus = f_minus = Fraction(0)
    for order in table.rows:
        d = order_distance_sum(order, table.head)
        freq = table.frequency(order, unit)
        if d > d_random:
            f_plus += freq
        elif d < d_random:
            f_minus += freq
    return f_plus, f_minus


@dataclass(frozen=True)
class HeadPlacementReport:
    """Per-unit analysis bundle for one order-frequency table."""

    unit: str
    n: int
    F: Fraction
    g: Fraction
    proportion: float
    p_values: tuple[tuple[int, int, float], ...]  # (trials, successes, p)
    mean_D: float
    sigma_mean_D: float
    k: float
    three_sigma_significant: bool
    ci_ends: tuple[float, float]
    ci_mid: tuple[float, float]

    @property
    def d_min(self) -> int:
        return d_min_single_head(self.n)

    @property
    def d_max(self) -> int:
        return d_max_single_head(self.n)

    @property
    def null_mean_D(self) -> Fraction:
        return expected_D(self.n)


def analyze(
    table: OrderFrequencyTable,
    alpha: float = 0.05,
    p0: Real | None = None,
) -> list[HeadPlacementReport]:
    """Full head-placement analysis, one report per measurement unit.

    p0 defaults to 2/n, the null probability of a head-end placement. The
    four-way integer-transformation test is always run; duplicate
    (trials, successes) pairings collapse, so integer units carry a single
    p-value and fractional units up to four.
    """
    n = table.n
    null_p = Fraction(p0) if p0 is not None else p_head_at_ends(n)
    reports = []
    for unit in table.units:
        F = total_frequency(table, unit)
        if F == 0:
            raise ValueError(f"zero total frequency for unit {unit!r}")
        g = head_end_frequency(table, unit)
        seen: set[tuple[int, int]] = set()
        p_values = []
        for trials, successes, p in quad_binomial_test(g, F, null_p):
            if (trials, successes) not in seen:
                seen.add((trials, successes))
                p_values.append((trials, successes, p))
        mean_D = mean_D_from_g(n, g, F)
        sigma = sigma_mean_D(star(n), F)
        k = sigma_separation_k(mean_D, F, n)
        proportion = float(g / F)
        reports.append(
            HeadPlacementReport(
                unit=unit,
                n=n,
                F=F,
                g=g,
                proportion=proportion,
                p_values=tuple(p_values),
                mean_D=mean_D,
                sigma_mean_D=sigma,
                k=k,
                three_sigma_significant=three_sigma_verdict(k),
                ci_ends=binomial_proportion_ci(proportion, F, alpha),
                ci_mid=binomial_proportion_ci(1 - proportion, F, alpha),
            )
        )
    return reports
