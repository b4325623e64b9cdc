"""Observable diameters and intrinsic dimension of finite data structures.

A data structure here is a finite weighted point set together with a family
of real-valued feature rows.  Each feature pushes the point weights forward
to a finitely supported distribution on the real line.  The partial diameter
of such a distribution at mass defect ``alpha`` is the width of the
narrowest window of consecutive atoms still carrying mass ``1 - alpha``;
the observable diameter is the largest partial diameter over the feature
family; and the intrinsic dimension is ``1 / I**2`` where ``I`` integrates
the observable diameter (clamped to 1) over ``alpha`` in [0, 1].

All quantities stay exact rationals whenever the inputs are rationals
(:class:`fractions.Fraction`, :class:`int`); float inputs degrade gracefully
to float arithmetic with a small mass tolerance.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, float, Fraction]

#: Absolute tolerance absorbing weight round-off in mass comparisons.
#: Only applied when a distribution carries float weights; exact rational
#: weights are compared exactly.
MASS_TOLERANCE = 1e-12

#: Default number of subintervals for grid-bracketed integration.
DEFAULT_RESOLUTION = 1000


def _all_rational(values: Iterable[Scalar]) -> bool:
    return all(isinstance(v, Rational) for v in values)


@dataclass(frozen=True)
class EmpiricalDistribution:
    """Finitely supported probability distribution on the real line.

    ``atoms`` holds ``(value, weight)`` pairs with values strictly increasing
    and weights strictly positive, summing to one within
    :data:`MASS_TOLERANCE`.  Use :meth:`from_pairs` to build one from raw
    pairs; it merges equal values and sorts.
    """

    atoms: tuple[tuple[Scalar, Scalar], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", tuple((v, w) for v, w in self.atoms))
        if not self.atoms:
            raise ValueError("a distribution needs at least one atom")
        values = self.values
        if any(w <= 0 for w in self.weights):
            raise ValueError("atom weights must be strictly positive")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("atom values must be strictly increasing (merge duplicates first)")
        total = sum(self.weights)
        if abs(total - 1) > MASS_TOLERANCE:
            raise ValueError(f"atom weights must sum to 1, got {total!r}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Scalar, Scalar]]) -> "EmpiricalDistribution":
        """Build a distribution from raw pairs, merging equal values."""
        merged: dict[Scalar, Scalar] = {}
        for value, weight in pairs:
            merged[value] = merged[value] + weight if value in merged else weight
        return cls(tuple(sorted(merged.items())))

    @property
    def values(self) -> tuple[Scalar, ...]:
        return tuple(v for v, _ in self.atoms)

    @property
    def weights(self) -> tuple[Scalar, ...]:
        return tuple(w for _, w in self.atoms)

    @property
    def mass_tolerance(self) -> Scalar:
        """0 for exact rational weights, :data:`MASS_TOLERANCE` otherwise."""
        return 0 if _all_rational(self.weights) else MASS_TOLERANCE


@dataclass(frozen=True)
class EmpiricalDataStructure:
    """Finite weighted point set with a family of real-valued feature rows.

    ``weights`` has one strictly positive entry per point (summing to one
    within :data:`MASS_TOLERANCE`); ``features`` is a tuple of rows, each of
    length :attr:`point_count`.  The family may be empty.  Instances are
    immutable and safe to share.
    """

    weights: tuple[Scalar, ...]
    features: tuple[tuple[Scalar, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "features", tuple(tuple(row) for row in self.features))
        if not self.weights:
            raise ValueError("a data structure needs at least one point")
        if any(w <= 0 for w in self.weights):
            raise ValueError("point weights must be strictly positive")
        total = sum(self.weights)
        if abs(total - 1) > MASS_TOLERANCE:
            raise ValueError(f"point weights must sum to 1, got {total!r}")
        n = len(self.weights)
        for row in self.features:
            if len(row) != n:
                raise ValueError(f"feature row has {len(row)} entries for {n} points")

    @property
    def point_count(self) -> int:
        return len(self.weights)

    @property
    def feature_count(self) -> int:
        return len(self.features)


@dataclass(frozen=True)
class AlphaGrid:
    """Uniform discretization of [0, 1] into ``resolution`` subintervals."""

    resolution: int = DEFAULT_RESOLUTION

    def __post_init__(self) -> None:
        if self.resolution < 2:
            raise ValueError("grid resolution must be at least 2")


def push_forward(ds: EmpiricalDataStructure, feature_index: int) -> EmpiricalDistribution:
    """Distribution of one feature's values under the structure's weights."""
    if not 0 <= feature_index < ds.feature_count:
        raise IndexError(f"feature index {feature_index} out of range for {ds.feature_count} features")
    row = ds.features[feature_index]
    return EmpiricalDistribution.from_pairs(zip(row, ds.weights))


def _check_alpha(alpha: Scalar) -> None:
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")


def partial_diameter(dist: EmpiricalDistribution, alpha: Scalar) -> Scalar:
    """Width of the narrowest window of consecutive atoms with mass >= 1 - alpha.

    Windows of consecutive atoms are exhaustive minimizers: any set carrying
    the required mass contains atoms whose spanning interval carries it too,
    and the interval is at most as wide.  Runs a two-pointer sweep in O(n).
    The mass comparison is non-strict; a window of mass exactly ``1 - alpha``
    qualifies.
    """
    _check_alpha(alpha)
    required = 1 - alpha
    tol = dist.mass_tolerance
    if tol:
        required = required - tol
    if required <= 0:
        return 0
    values = dist.values
    weights = dist.weights
    best: Scalar | None = None
    acc: Scalar = 0
    left = 0
    for right, w in enumerate(weights):
        acc = acc + w
        while acc - weights[left] >= required:
            acc = acc - weights[left]
            left += 1
        if acc >= required:
            width = values[right] - values[left]
            if best is None or width < best:
                best = width
    if best is None:
        # Only reachable through pathological round-off; the full support
        # always qualifies up to the tolerance.
        best = values[-1] - values[0]
    return best


def observable_diameter(ds: EmpiricalDataStructure, alpha: Scalar) -> Scalar:
    """Largest partial diameter over the feature family; 0 for an empty family."""
    _check_alpha(alpha)
    return max(
        (partial_diameter(push_forward(ds, i), alpha) for i in range(ds.feature_count)),
        default=0,
    )


def _partial_diameter_profile(dist: EmpiricalDistribution) -> list[tuple[Scalar, Scalar]]:
    """Step profile of ``alpha -> partial_diameter(dist, alpha)``.

    Returns ``[(t_0, d_0), (t_1, d_1), ...]`` with ``t_0 = 0``, thresholds
    strictly increasing and diameters strictly decreasing; ``d_k`` holds on
    ``[t_k, t_{k+1})`` (and ``d_last`` through alpha = 1).  A window of mass
    ``mu`` qualifies for every ``alpha >= 1 - mu`` (minus the float
    tolerance), so the profile is the running minimum of window widths in
    threshold order.
    """
    values = dist.values
    weights = dist.weights
    tol = dist.mass_tolerance
    n = len(values)
    entries: list[tuple[Scalar, Scalar]] = []
    for i in range(n):
        acc: Scalar = 0
        for j in range(i, n):
            acc = acc + weights[j]
            t = 1 - acc
            if tol:
                t = t - tol
            if t < 0:
                t = 0
            entries.append((t, values[j] - values[i]))
    entries.sort()
    profile: list[tuple[Scalar, Scalar]] = []
    for t, d in entries:
        if profile and t == profile[-1][0]:
            continue
        if not profile or d < profile[-1][1]:
            profile.append((t, d))
    return profile


def _step_max_envelope(profiles: Sequence[Sequence[tuple[Scalar, Scalar]]]) -> list[tuple[Scalar, Scalar]]:
    """Pointwise maximum of right-continuous non-increasing step profiles.

    Sweeps the union of thresholds keeping a lazy max-heap of the profiles'
    current values; emits a breakpoint whenever the maximum drops.
    """
    if not profiles:
        return [(0, 0)]
    current: list[Scalar] = [p[0][1] for p in profiles]
    heap: list[tuple[Scalar, int]] = [(-v, idx) for idx, v in enumerate(current)]
    heapq.heapify(heap)
    events = sorted(
        (t, idx, v) for idx, profile in enumerate(profiles) for t, v in profile[1:]
    )
    envelope: list[tuple[Scalar, Scalar]] = [(0, max(current))]
    i = 0
    while i < len(events):
        t = events[i][0]
        while i < len(events) and events[i][0] == t:
            _, idx, v = events[i]
            current[idx] = v
            heapq.heappush(heap, (-v, idx))
            i += 1
        while heap and -heap[0][0] != current[heap[0][1]]:
            heapq.heappop(heap)
        peak = -heap[0][0]
        if peak != envelope[-1][1]:
            envelope.append((t, peak))
    return envelope


def _observable_diameter_envelope(ds: EmpiricalDataStructure) -> list[tuple[Scalar, Scalar]]:
    profiles = [
        _partial_diameter_profile(push_forward(ds, i)) for i in range(ds.feature_count)
    ]
    return _step_max_envelope(profiles)


@lru_cache(maxsize=8)
def _grid_points(resolution: int) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...], tuple[Fraction, ...]]:
    left = tuple(Fraction(k, resolution) for k in range(resolution))
    mid = tuple(Fraction(2 * k + 1, 2 * resolution) for k in range(resolution))
    right = tuple(Fraction(k, resolution) for k in range(1, resolution + 1))
    return left, mid, right


def _riemann_sum(
    envelope: Sequence[tuple[Scalar, Scalar]], points: Sequence[Fraction], resolution: int
) -> Scalar:
    """Sum of the clamped envelope over ``points``, divided by ``resolution``.

    Equivalent to evaluating ``min(envelope, 1)`` at every point; the points
    are walked in ascending order against the envelope segments so the cost
    is O(len(points) + len(envelope)).
    """
    thresholds = [t for t, _ in envelope]
    clamped = [min(v, 1) for _, v in envelope]
    counts = [0] * len(envelope)
    ptr = 0
    for x in points:
        while ptr + 1 < len(thresholds) and thresholds[ptr + 1] <= x:
            ptr += 1
        counts[ptr] += 1
    total: Scalar = 0
    for value, count in zip(clamped, counts):
        if count and value:
            total = total + value * count
    if isinstance(total, Rational):
        return Fraction(total, resolution)
    return total / resolution


def _dimension_from_integral(integral: Scalar) -> Scalar:
    if integral == 0:
        return math.inf
    if isinstance(integral, Rational):
        return 1 / Fraction(integral) ** 2
    return 1.0 / integral**2


@dataclass(frozen=True)
class GridDimension:
    """Grid estimate of the intrinsic dimension with a certified bracket.

    The integrand ``min(observable_diameter, 1)`` is non-increasing in
    alpha, so the right-endpoint sum underestimates and the left-endpoint
    sum overestimates the true integral; the bracket width is at most
    ``1 / resolution``.  ``integral`` and ``dimension`` come from the
    midpoint sum; a vanishing integral yields ``math.inf``.
    """

    dimension: Scalar
    integral: Scalar
    integral_lower: Scalar
    integral_upper: Scalar
    resolution: int

    @property
    def dimension_lower(self) -> Scalar:
        return _dimension_from_integral(self.integral_upper)

    @property
    def dimension_upper(self) -> Scalar:
        return _dimension_from_integral(self.integral_lower)


def intrinsic_dimension_grid(
    ds: EmpiricalDataStructure, grid: AlphaGrid | None = None
) -> GridDimension:
    """Intrinsic dimension via grid integration of the observable diameter.

    Evaluates the integrand at the midpoints of a uniform alpha grid for the
    reported value and at the left/right endpoints for the bracket.
    """
    if grid is None:
        grid = AlphaGrid()
    envelope = _observable_diameter_envelope(ds)
    left_pts, mid_pts, right_pts = _grid_points(grid.resolution)
    upper = _riemann_sum(envelope, left_pts, grid.resolution)
    integral = _riemann_sum(envelope, mid_pts, grid.resolution)
    lower = _riemann_sum(envelope, right_pts, grid.resolution)
    return GridDimension(
        dimension=_dimension_from_integral(integral),
        integral=integral,
        integral_lower=lower,
        integral_upper=upper,
        resolution=grid.resolution,
    )


def augment_constants(ds: EmpiricalDataStructure) -> EmpiricalDataStructure:
    """Append one constant feature row (value 0).

    A constant feature pushes forward to a single atom, whose partial
    diameter is 0 at every alpha, so observable diameters are unchanged
    whenever the family was already non-empty.
    """
    constant_row = (0,) * ds.point_count
    return EmpiricalDataStructure(ds.weights, ds.features + (constant_row,))


def relabel_points(
    ds: EmpiricalDataStructure, permutation: Sequence[int]
) -> EmpiricalDataStructure:
    """Permute points: position ``j`` of the result is point ``permutation[j]``."""
    perm = tuple(permutation)
    if sorted(perm) != list(range(ds.point_count)):
        raise ValueError("permutation must be a bijection on point indices")
    weights = tuple(ds.weights[p] for p in perm)
    features = tuple(tuple(row[p] for p in perm) for row in ds.features)
    return EmpiricalDataStructure(weights, features)
