"""Published reference values and tolerance comparisons for the reproduction gate.

The reproduction commands recompute everything from the embedded data and
compare against these values: proportions to within 1e-3, <D> to within
1e-3, sigma to within 1e-3, k to within 1e-2, p-values to two significant
figures, counts exactly.
"""

from __future__ import annotations

import math

# unit, g/F, F, g, p-value  (fractional-unit rows repeat per integer transform)
TABLE2_PUBLISHED: tuple[tuple[str, float, int, int, float], ...] = (
    ("languages", 0.641, 576, 369, 7.3e-12),
    ("genera", 0.596, 322, 192, 3.3e-4),
    ("adjusted", 0.567, 217, 123, 0.029),
    ("adjusted", 0.564, 218, 123, 0.034),
    ("adjusted", 0.571, 217, 124, 0.021),
    ("adjusted", 0.569, 218, 124, 0.025),
)

# unit, F, D_min, null mean, sigma, <D>, D_max, k
TABLE3_PUBLISHED: tuple[tuple[str, float, int, int, float, float, int, float], ...] = (
    ("languages", 576, 4, 5, 0.042, 5.281, 6, 6.75),
    ("genera", 322, 4, 5, 0.056, 5.193, 6, 3.46),
    ("adjusted", 217.4, 4, 5, 0.068, 5.133, 6, 1.97),
    ("adjusted", 217, 4, 5, 0.068, 5.134, 6, 1.97),
    ("adjusted", 218, 4, 5, 0.068, 5.128, 6, 1.9),
    ("adjusted", 217, 4, 5, 0.068, 5.143, 6, 2.1),
    ("adjusted", 218, 4, 5, 0.068, 5.138, 6, 2.03),
)

# published right-tail p-values for the verb-end test on dominant S/O/V orders
SOV_PUBLISHED: dict[str, float] = {"languages": 2.7e-30, "families": 9.2e-37}

RING_NODES_PUBLISHED = ("SOV", "SVO", "VSO", "VOS", "OVS", "OSV")

PROPORTION_TOL = 1e-3
MEAN_D_TOL = 1e-3
SIGMA_TOL = 1e-3
K_TOL = 1e-2


def within(value: float, reference: float, tolerance: float) -> bool:
    return abs(value - reference) <= tolerance


def same_to_sig_figs(value: float, reference: float, figures: int = 2) -> bool:
    """True iff both round to the same `figures`-significant-figure decimal."""
    spec = f".{figures - 1}e"
    return format(value, spec) == format(reference, spec)


def within_order_of_magnitude(value: float, reference: float) -> bool:
    """True iff the two positive values differ by at most a factor of ten."""
    if value <= 0 or reference <= 0:
        return False
    return abs(math.log10(value) - math.log10(reference)) <= 1.0
