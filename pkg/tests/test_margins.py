import numpy as np
from numpy.testing import assert_allclose, assert_array_equal
import pytest

from lpcopula.margins import fit_margin, mid_distribution, pseudo_observations, quantile


def test_balanced_binary():
    g = fit_margin([0, 1, 0, 1])
    assert_array_equal(g.values, [0, 1])
    assert_allclose(g.masses, [0.5, 0.5])
    assert_allclose(g.midcdf, [0.25, 0.75])
    assert g.cdf[-1] == 1.0


def test_single_value_is_degenerate():
    g = fit_margin([5])
    assert g.degenerate
    assert_allclose(g.masses, [1.0])
    assert g.cube_sum == 1.0


def test_tie_free_midcdf():
    g = fit_margin([3, 1, 2])
    assert_allclose(g.midcdf, [1 / 6, 0.5, 5 / 6])
    assert_allclose(g.cube_sum, 1 / 9)


@pytest.mark.parametrize("x, expected", [(0, 0.125), (1, 0.625)])
def test_mid_distribution_binary(x, expected):
    g = fit_margin([0, 1, 1, 1])
    assert_allclose(mid_distribution(g, x), expected)


def test_mid_distribution_midrank():
    assert mid_distribution(fit_margin([3, 1, 2]), 2) == 0.5


def test_mid_distribution_matches_count_formula():
    rng = np.random.default_rng(3)
    x = rng.integers(0, 6, size=40)
    g = fit_margin(x)
    expect = [(np.sum(x < v) + 0.5 * np.sum(x == v)) / x.size for v in x]
    assert_allclose(mid_distribution(g, x), expect, atol=1e-15)


def test_mid_distribution_off_support():
    with pytest.raises(ValueError, match="outside empirical support"):
        mid_distribution(fit_margin([0, 1]), 0.5)


@pytest.mark.parametrize("u, expected", [(0.5, 0), (0.500001, 1), (1.0, 1)])
def test_quantile_binary(u, expected):
    assert quantile(fit_margin([0, 1]), u) == expected


def test_quantile_three_values():
    assert quantile(fit_margin([3, 1, 2]), 0.34) == 2


@pytest.mark.parametrize("u", [0.0, -0.1, 1.5, np.nan])
def test_quantile_range(u):
    with pytest.raises(ValueError, match="out of range"):
        quantile(fit_margin([0, 1]), u)


def test_pseudo_observations():
    assert_allclose(pseudo_observations([0, 1], [0, 1]), [[0.25, 0.25], [0.75, 0.75]])
    uv = pseudo_observations([1, 2, 3], [3, 2, 1])
    assert_allclose(uv[:, 0], [1 / 6, 0.5, 5 / 6])
    assert_allclose(uv[:, 1], [5 / 6, 0.5, 1 / 6])
    assert_allclose(pseudo_observations([7, 7, 7], [1, 2, 3])[:, 0], 0.5)


@pytest.mark.parametrize("bad, msg", [([], "empty"), ([1, np.nan], "non-finite"),
                                      ([1, np.inf], "non-finite")])
def test_bad_input(bad, msg):
    with pytest.raises(ValueError, match=msg):
        fit_margin(bad)


def test_length_mismatch():
    with pytest.raises(ValueError, match="length"):
        pseudo_observations([1, 2], [1, 2, 3])


def test_negative_zero_grouped():
    g = fit_margin([0.0, -0.0, 1.0])
    assert g.n_unique == 2
    assert_allclose(g.masses, [2 / 3, 1 / 3])


def test_immutable():
    g = fit_margin([1, 2, 3])
    with pytest.raises(ValueError):
        g.values[0] = 9
