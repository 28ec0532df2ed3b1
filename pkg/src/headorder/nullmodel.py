"""Moments and exact distributions of D under uniform random shuffling.

The null hypothesis: all n! orderings of the sequence are equally likely.
Moments are exact rationals throughout; floats appear only at reporting
boundaries (sigma values). A brute-force enumeration over all n!
arrangements serves as the independent oracle for the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Mapping, Union

from .trees import FreeTree, degree_second_moment

Real = Union[int, float, Fraction]

DEFAULT_ENUMERATION_CAP = 9


class EnumerationCapError(RuntimeError):
    """An exhaustive enumeration would exceed the configured size cap."""


@dataclass(frozen=True)
class DiscreteDistribution:
    """Exact probability mass function over integer values of D."""

    support: tuple[int, ...]
    mass: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        support = tuple(self.support)
        mass = tuple(Fraction(m) for m in self.mass)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "mass", mass)
        if not support or len(support) != len(mass):
            raise ValueError("support and mass must be matched, non-empty sequences")
        if any(b <= a for a, b in zip(support, support[1:])):
            raise ValueError("support must be strictly increasing")
        if any(m <= 0 for m in mass):
            raise ValueError("all masses must be positive")
        if sum(mass) != 1:
            raise ValueError("masses must sum exactly to 1")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "DiscreteDistribution":
        total = sum(counts.values())
        support = tuple(sorted(v for v, c in counts.items() if c))
        return cls(support, tuple(Fraction(counts[v], total) for v in support))

    def probability(self, value: int) -> Fraction:
        for v, m in zip(self.support, self.mass):
            if v == value:
                return m
        return Fraction(0)

    def mean(self) -> Fraction:
        return sum((v * m for v, m in zip(self.support, self.mass)), Fraction(0))

    def variance(self) -> Fraction:
        mu = self.mean()
        return sum(
            ((v - mu) ** 2 * m for v, m in zip(self.support, self.mass)), Fraction(0)
        )

    def to_csv(self) -> str:
        """CSV rows of value, exact probability, decimal probability."""
        lines = ["value,probability,probability_decimal"]
        for v, m in zip(self.support, self.mass):
            lines.append(f"{v},{m.numerator}/{m.denominator},{float(m):.12g}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class NullMoments:
    """Mean and variance of D under shuffling; sigma of the F-fold average."""

    mean: Fraction
    variance: Fraction
    sigma_mean_D: float | None = None


def expected_D(n: int) -> Fraction:
    """Mean of D under random shuffling: (n^2 - 1)/3, for any tree on n vertices."""
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    return Fraction(n * n - 1, 3)


def variance_D(tree: FreeTree) -> Fraction:
    """Variance of D under random shuffling, exact for an arbitrary tree.

    V(D) = ((n+1)/45) * [(n-1)^2 + (n/4 - 1) * n * <k^2>], where <k^2> is the
    second moment of degree about zero. The degree term vanishes at n = 4, so
    every 4-vertex tree has V(D) = 1.
    """
    n = tree.n
    k2 = degree_second_moment(tree)
    return Fraction(n + 1, 45) * ((n - 1) ** 2 + (Fraction(n, 4) - 1) * n * k2)


def variance_D_star(n: int) -> Fraction:
    """Variance of D under random shuffling for the star tree on n vertices."""
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    return Fraction((n - 2) * (n - 1) * (n + 1) * (n + 2), 180)


def sigma_mean_D(tree: FreeTree, F: Real) -> float:
    """Standard deviation of the F-instance average of D: sigma(D)/sqrt(F)."""
    if F <= 0:
        raise ValueError(f"instance count F must be positive, got {F}")
    return math.sqrt(float(variance_D(tree)) / float(F))


def null_moments(tree: FreeTree, F: Real | None = None) -> NullMoments:
    sigma = None if F is None else sigma_mean_D(tree, F)
    return NullMoments(expected_D(tree.n), variance_D(tree), sigma)


def enumerate_D_distribution(
    tree: FreeTree, max_n: int = DEFAULT_ENUMERATION_CAP
) -> DiscreteDistribution:
    """Exact pmf of D over all n! arrangements of the tree's vertices.

    Brute force; refuses above `max_n` rather than sampling, since its whole
    point is exactness.
    """
    n = tree.n
    if n > max_n:
        raise EnumerationCapError(
            f"enumerating {n}! arrangements exceeds the cap of n <= {max_n}; "
            f"raise the cap explicitly if you really want this"
        )
    edges = [(u - 1, v - 1) for u, v in tree.edges]
    counts: dict[int, int] = {}
    for positions in permutations(range(1, n + 1)):
        d = 0
        for u, v in edges:
            d += abs(positions[u] - positions[v])
        counts[d] = counts.get(d, 0) + 1
    return DiscreteDistribution.from_counts(counts)


def _mass_sequence(dist: DiscreteDistribution | Mapping) -> list:
    if isinstance(dist, DiscreteDistribution):
        return list(dist.mass)
    return [dist[key] for key in sorted(dist)]


def is_unimodal(dist: DiscreteDistribution | Mapping) -> bool:
    """True iff the masses rise (weakly) to a single peak, then fall (weakly).

    Plateaus count as unimodal, so a two-point distribution qualifies. Accepts
    either a DiscreteDistribution or any mapping value -> mass.
    """
    masses = _mass_sequence(dist)
    i = 0
    while i + 1 < len(masses) and masses[i + 1] >= masses[i]:
        i += 1
    while i + 1 < len(masses) and masses[i + 1] <= masses[i]:
        i += 1
    return i == len(masses) - 1


@dataclass(frozen=True)
class ThreeSigmaAssumptions:
    """Preconditions of the Vysochanskij-Petunin inequality for a distribution."""

    finite_variance: bool
    unimodal: bool

    @property
    def satisfied(self) -> bool:
        return self.finite_variance and self.unimodal


def check_three_sigma_assumptions(
    dist: DiscreteDistribution | Mapping,
) -> ThreeSigmaAssumptions:
    """Diagnostic for applying the 3-sigma rule to the supplied distribution.

    Any distribution with finite support has finite variance; both checks are
    still reported so callers can log them.
    """
    masses = _mass_sequence(dist)
    finite = all(math.isfinite(float(m)) for m in masses)  # finite support given
    return ThreeSigmaAssumptions(finite_variance=finite, unimodal=is_unimodal(dist))
