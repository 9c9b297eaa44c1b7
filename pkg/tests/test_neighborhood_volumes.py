"""Neighborhood volumes and scale-normalized volume ratios."""

import math
from fractions import Fraction

import pytest

from fracspec.errors import DomainError
from fracspec.geometry.cloud import PointCloud
from fracspec.geometry.intervals import IntervalUnion
from fracspec.geometry.sweeps import ScaleSweep
from fracspec.geometry.volumes import (
    eps_neighborhood_volume,
    minkowski_ratio_sweep,
)
from fracspec.numeric import LogRatio


def test_interval_union_volume_exact():
    k1 = IntervalUnion.from_endpoints([(0, Fraction(1, 3)), (Fraction(2, 3), 1)])
    vol = eps_neighborhood_volume(k1, Fraction(1, 9))
    assert vol.exact
    assert vol.value == vol.low == vol.high == Fraction(10, 9)


def test_cloud_volume_1d_exact():
    cloud = PointCloud.from_points([Fraction(0), Fraction(1, 2), Fraction(1)])
    vol = eps_neighborhood_volume(cloud, Fraction(1, 8))
    # three disjoint intervals of length 1/4
    assert vol.exact and vol.value == Fraction(3, 4)
    # neighbors merge once 2*eps reaches the 1/2 spacing
    vol2 = eps_neighborhood_volume(cloud, Fraction(1, 4))
    assert vol2.value == Fraction(3, 2)


def test_occupancy_bounds_bracket_disk_area():
    cloud = PointCloud.from_points([(0.0, 0.0)])
    eps = 0.5
    vol = eps_neighborhood_volume(cloud, eps)
    true_area = math.pi * eps * eps
    assert not vol.exact
    assert vol.low <= true_area <= vol.high
    # default cell eps/8 keeps the bracket within ~25 percent
    assert vol.high - vol.low < 0.5 * true_area
    # finer cells tighten the bracket
    fine = eps_neighborhood_volume(cloud, eps, cells_per_eps=32)
    assert fine.high - fine.low < vol.high - vol.low
    assert fine.low <= true_area <= fine.high


def test_empty_union_flagged():
    vol = eps_neighborhood_volume(IntervalUnion.empty(), Fraction(1, 2))
    assert vol.empty_input and vol.value == 0


def test_volume_input_validation():
    with pytest.raises(DomainError):
        eps_neighborhood_volume(IntervalUnion.empty(), 0)
    with pytest.raises(DomainError):
        eps_neighborhood_volume([(0, 1)], Fraction(1, 2))


def build_ternary_union(depth):
    starts = [Fraction(0)]
    length = Fraction(1)
    for _ in range(depth):
        starts = [s + a * length for s in starts for a in (Fraction(0), Fraction(2, 3))]
        length /= 3
    return IntervalUnion.from_pairs((s, length) for s in starts)


def test_ternary_ratio_exact_five_halves():
    """eps**(beta-1) * volume at eps = 1/9 for the ternary set is 10/4.

    Hand derivation: fattening the level-2 stage by 1/9 merges each
    sibling pair, leaving [-1/9, 4/9] and [5/9, 10/9], total 10/9, and
    (1/9)**(beta-1) = (1/9)**beta * 9 = 9/4, so the ratio is 10/4.
    """
    union = build_ternary_union(10)
    beta = LogRatio(2, 3)
    sweep = ScaleSweep(Fraction(1, 9), Fraction(1, 3), 5)
    result = minkowski_ratio_sweep(union, beta, sweep)
    first = result.rows[0]
    assert first.ratio_exact == Fraction(5, 2)
    assert all(r.ratio_exact is not None for r in result.rows)
    assert all(Fraction(1) <= r.ratio_exact <= Fraction(3) for r in result.rows)
    assert result.bounded_by(3.0)
    running = result.running_max()
    assert running == sorted(running)


def test_ratio_sweep_alpha_range():
    union = build_ternary_union(4)
    sweep = ScaleSweep(Fraction(1, 9), Fraction(1, 3), 4)
    with pytest.raises(DomainError):
        minkowski_ratio_sweep(union, 1.5, sweep)
    with pytest.raises(DomainError):
        minkowski_ratio_sweep(union, -0.1, sweep)


def test_full_interval_ratio_constant():
    # alpha = 1 on [0, 1]: ratio = (1 + 2 eps) -> stays within [1, 3] for eps <= 1
    union = IntervalUnion.from_endpoints([(0, 1)])
    sweep = ScaleSweep(Fraction(1, 2), Fraction(1, 2), 6)
    result = minkowski_ratio_sweep(union, 1.0, sweep)
    for row, eps in zip(result.rows, sweep.scales()):
        assert math.isclose(row.ratio, float(1 + 2 * eps), rel_tol=1e-12)
