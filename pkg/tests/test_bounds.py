"""Distance bounds: exact packing arithmetic and the entropy form."""

import math

import pytest

from z2cb.bounds import (
    FLOAT_SLACK,
    EpsilonZeroError,
    ball_volume,
    combined_upper_bound,
    entropy,
    entropy_bound_rhs,
    entropy_params,
    griesmer_max_d,
    sphere_packing_max_k,
)


def test_entropy_endpoints_and_symmetry():
    assert entropy(0.0) == 0.0
    assert entropy(1.0) == 0.0
    assert entropy(0.5) == 1.0
    assert abs(entropy(0.11) - entropy(0.89)) < 1e-12
    with pytest.raises(ValueError):
        entropy(-0.1)
    with pytest.raises(ValueError):
        entropy(1.1)


def test_ball_volume_exact():
    assert ball_volume(7, 0) == 1
    assert ball_volume(7, 1) == 8
    assert ball_volume(23, 3) == 2048
    assert ball_volume(5, 5) == 32
    with pytest.raises(ValueError):
        ball_volume(5, 6)
    with pytest.raises(ValueError):
        ball_volume(5, -1)


def test_sphere_packing_perfect_codes():
    # equality cases: 2^4 * 8 = 2^7 and 2^12 * 2048 = 2^23
    assert sphere_packing_max_k(7, 3) == 4
    assert sphere_packing_max_k(23, 7) == 12
    assert (1 << 4) * ball_volume(7, 1) == 1 << 7
    assert (1 << 12) * ball_volume(23, 3) == 1 << 23
    assert sphere_packing_max_k(15, 3) == 11
    assert sphere_packing_max_k(7, 7) == 1  # repetition code
    with pytest.raises(ValueError):
        sphere_packing_max_k(7, 8)
    with pytest.raises(ValueError):
        sphere_packing_max_k(7, 0)


def test_entropy_params_requires_d_at_least_3():
    for d in (1, 2):
        with pytest.raises(EpsilonZeroError):
            entropy_params(10, d)
    with pytest.raises(ValueError):
        entropy_params(4, 5)
    p = entropy_params(11, 4)
    assert (p.t, p.epsilon) == (1, 1 / 11)


def test_entropy_bound_dominates_packing_spot():
    for n, d in ((7, 3), (23, 7), (24, 8), (128, 11)):
        assert entropy_bound_rhs(n, d) >= sphere_packing_max_k(n, d)


def test_entropy_bound_value():
    # eps = 1/7: (1 - H(1/7)) * 7 + 0.5 * log2(14)
    expected = (1 - entropy(1 / 7)) * 7 + 0.5 * math.log2(14)
    assert abs(entropy_bound_rhs(7, 3) - expected) < FLOAT_SLACK


def test_griesmer_known_values():
    assert griesmer_max_d(7, 4) == 3
    assert griesmer_max_d(23, 12) == 8
    assert griesmer_max_d(12, 7) == 4
    assert griesmer_max_d(4, 3) == 2
    assert griesmer_max_d(5, 5) == 1
    assert griesmer_max_d(10, 1) == 10
    with pytest.raises(ValueError):
        griesmer_max_d(3, 4)


def test_combined_upper_bound_golay():
    rpt = combined_upper_bound(23, 12)
    assert rpt.combined == 7
    assert rpt.per_bound["sphere_packing"] == 7
    assert rpt.per_bound["singleton"] == 12
    assert rpt.per_bound["griesmer"] == 8
    assert rpt.as_dict()["combined"] == 7


def test_combined_even_distance_refinement():
    # without the parity-extension step the packing bound would allow d = 8
    assert sphere_packing_max_k(23, 8) >= 12
    assert combined_upper_bound(23, 12).combined == 7
    assert combined_upper_bound(9, 5).combined == 3
    assert combined_upper_bound(17, 9).combined == 5


def test_combined_small_cases():
    assert combined_upper_bound(4, 3).combined == 2
    assert combined_upper_bound(12, 7).combined == 4
    assert combined_upper_bound(11, 5).combined == 4
    assert combined_upper_bound(7, 4).combined == 3
    assert combined_upper_bound(5, 1).combined == 5
    with pytest.raises(ValueError):
        combined_upper_bound(4, 5)


def test_combined_monotone_in_k():
    # adding constraints cannot raise the best possible distance
    for n in (8, 13, 21):
        vals = [combined_upper_bound(n, k).combined for k in range(1, n + 1)]
        assert vals == sorted(vals, reverse=True)
