"""Exact minimum-complexity search over the binary decomposition family.

Both complexity characteristics are additive over the decomposition step

    value(p,q) = value(p,i) + value(i,q) + value(p,i-1) + value(i+1,q) + 1

so an interval DP minimizing over i is exact within the family.  The minimum
for an interval depends only on its length (the base cases are translation
invariant), so tables are stored per length and answered per interval.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from functools import lru_cache

from .decompose import GdSpec, InvalidM, decompose, decompose_gd
from .expr import ExprError, Expression, metric_plus, metric_terms
from .graph import _check_n


class DegenerateFit(ExprError):
    """Not enough spread in the data points to estimate an exponent."""


@lru_cache(maxsize=None)
def recurrence_T(n: int) -> int:
    """Term count of the optimal (middle-split) decomposition expression."""
    _check_n(n)
    if n == 1:
        return 0
    if n == 2:
        return 1
    return (recurrence_T((n + 1) // 2) + recurrence_T(n // 2 + 1)
            + recurrence_T((n + 1) // 2 - 1) + recurrence_T(n // 2) + 1)


@lru_cache(maxsize=None)
def recurrence_P(n: int) -> int:
    """Plus-operator count of the optimal decomposition expression."""
    _check_n(n)
    if n in (1, 2):
        return 0
    return (recurrence_P((n + 1) // 2) + recurrence_P(n // 2 + 1)
            + recurrence_P((n + 1) // 2 - 1) + recurrence_P(n // 2) + 1)


def middle_vertices(p: int, q: int) -> set:
    """The middle vertex (odd interval length) or both middles (even length)."""
    if (q - p) % 2 == 0:
        return {(p + q) // 2}
    return {(p + q - 1) // 2, (p + q + 1) // 2}


class IntervalTable:
    """Per-interval minima and argmin vertex sets for one metric on (1, n)."""

    def __init__(self, n: int, metric: str):
        _check_n(n)
        if metric not in ("T", "P"):
            raise ValueError(f"metric must be 'T' or 'P', got {metric!r}")
        self.n = n
        self.metric = metric
        best = [None, 0, 1 if metric == "T" else 0]  # index = interval length
        arg_offsets: list[set] = [set(), set(), set()]
        for length in range(3, n + 1):
            candidates = {}
            for d in range(1, length - 1):  # i = p + d
                candidates[d] = best[d + 1] + best[length - d] + best[d] + best[length - d - 1] + 1
            low = min(candidates.values())
            best.append(low)
            arg_offsets.append({d for d, v in candidates.items() if v == low})
        self._best = best
        self._arg_offsets = arg_offsets

    def min_value(self, p: int = 1, q: int | None = None) -> int:
        q = self.n if q is None else q
        return self._best[q - p + 1]

    def argmin_vertices(self, p: int = 1, q: int | None = None) -> set:
        q = self.n if q is None else q
        return {p + d for d in self._arg_offsets[q - p + 1]}

    def intervals(self):
        for length in range(3, self.n + 1):
            for p in range(1, self.n - length + 2):
                yield p, p + length - 1


def min_metric(n: int, metric: str) -> IntervalTable:
    """Exact minima over the binary decomposition family for every interval."""
    _check_n(n, minimum=3)
    return IntervalTable(n, metric)


@dataclass
class TheoremReport:
    n_max: int
    checked: int
    violations: list  # (n, p, q, argmin, expected)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_theorem1(n_max: int) -> TheoremReport:
    """Check that the T-metric argmin of every interval of every n <= n_max
    is exactly the middle vertex set."""
    _check_n(n_max, minimum=3)
    violations = []
    checked = 0
    for n in range(3, n_max + 1):
        table = min_metric(n, "T")
        for p, q in table.intervals():
            checked += 1
            got = table.argmin_vertices(p, q)
            want = middle_vertices(p, q)
            if got != want:
                violations.append((n, p, q, sorted(got), sorted(want)))
    return TheoremReport(n_max, checked, violations)


@dataclass
class SpecialValuesReport:
    n_max: int
    special: list  # all special n <= n_max, ascending
    groups: list   # (n_first, n_last) per consecutive run
    groups_ok: bool  # runs match n_first_v = 2 n_first_{v-1} - 1, n_last_v = 2 n_last_{v-1} + 1


def special_values(n_max: int) -> SpecialValuesReport:
    """Values of n whose top-interval P-argmin strictly exceeds the middle set,
    i.e. graphs with several minimum-plus first-step decompositions."""
    _check_n(n_max, minimum=7)
    special = []
    for n in range(7, n_max + 1):
        table = min_metric(n, "P")
        if table.argmin_vertices(1, n) > middle_vertices(1, n):
            special.append(n)

    groups = []
    for n in special:
        if groups and n == groups[-1][1] + 1:
            groups[-1] = (groups[-1][0], n)
        else:
            groups.append((n, n))

    groups_ok = bool(groups) and groups[0][0] == 7
    for (f0, l0), (f1, l1) in zip(groups, groups[1:]):
        # the last group may be cut off by n_max before reaching its true end
        if f1 != 2 * f0 - 1 or (l1 != 2 * l0 + 1 and l1 != n_max):
            groups_ok = False
    if groups and groups[0] != (7, 7) and groups[0][1] != n_max:
        groups_ok = False
    return SpecialValuesReport(n_max, special, groups, groups_ok)


def gd_expression(n: int, m: int) -> Expression:
    """Uniform GD expression for the given part count (m=2 is the binary
    middle split)."""
    if m < 2:
        raise InvalidM(f"need m >= 2, got {m}")
    return decompose(n) if m == 2 else decompose_gd(n, GdSpec(m))


def exponent_fit(m: int, n_list: list) -> float:
    """Least-squares slope of log T(n) against log n for uniform GD
    expressions with the given part count."""
    if m < 2:
        raise InvalidM(f"need m >= 2, got {m}")
    if len(n_list) < 4 or any(y <= x for x, y in zip(n_list, n_list[1:])):
        raise DegenerateFit("need at least 4 strictly increasing values of n")
    points = []
    for n in n_list:
        t = metric_terms(gd_expression(n, m))
        if t < 2:
            raise DegenerateFit(f"term count {t} at n={n} is too small to fit")
        points.append((math.log(n), math.log(t)))
    return statistics.linear_regression([x for x, _ in points],
                                        [y for _, y in points]).slope


@dataclass
class ComplexityRecord:
    """One measured-vs-predicted row; predictions are the middle-split
    recurrences regardless of method."""

    n: int
    method: str
    t_measured: int
    p_measured: int
    t_predicted: int
    p_predicted: int
    equivalent: bool


def build_expression(n: int, method: str, *, m: int | None = None,
                     tie: str = "low", seed: int | None = None,
                     vertex: int | None = None) -> Expression:
    """Method-name dispatch shared by the CLI, tables, and verification."""
    from .decompose import FixedMap, Leftmost, MiddleHigh, MiddleLow, Seeded
    from .graph import canonical_expression

    if method == "canonical":
        return canonical_expression(n)
    if method == "middle":
        return decompose(n, MiddleHigh() if tie == "high" else MiddleLow())
    if method == "fixed":
        if vertex is None:
            raise ValueError("method 'fixed' needs a first-step vertex")
        return decompose(n, FixedMap({(1, n): vertex}))
    if method == "leftmost":
        return decompose(n, Leftmost())
    if method == "seeded":
        if seed is None:
            raise ValueError("method 'seeded' needs a seed")
        return decompose(n, Seeded(seed))
    if method == "gd":
        if m is None:
            raise ValueError("method 'gd' needs a part count m")
        return decompose_gd(n, GdSpec(m))
    raise ValueError(f"unknown method {method!r}")


def complexity_table(n_max: int, method: str = "middle",
                     verify: bool = True) -> list[ComplexityRecord]:
    """Records for n = 2..n_max; equivalence by full expansion up to n=14,
    by modular sampling beyond."""
    from .graph import equivalent_by_expansion, equivalent_by_sampling

    _check_n(n_max, minimum=2)
    rows = []
    for n in range(2, n_max + 1):
        e = build_expression(n, method)
        if not verify:
            equivalent = True
        elif n <= 14:
            equivalent = equivalent_by_expansion(e, n)
        else:
            equivalent = equivalent_by_sampling(e, n, trials=8)
        rows.append(ComplexityRecord(n, method, metric_terms(e), metric_plus(e),
                                     recurrence_T(n), recurrence_P(n), equivalent))
    return rows
