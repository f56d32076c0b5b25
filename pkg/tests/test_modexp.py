"""Mod-n exponential functions: series vs roots-of-unity vs brute force."""

import cmath
import math

import mpmath as mp
import pytest

from catscope import (
    ModExpSpec,
    SeriesCapError,
    derivative_residue,
    modexp_all,
    modexp_roots,
    modexp_series,
)

mp.mp.dps = 40

X_REAL = [-9.0, -4.0, -1.5, -0.2, 0.0, 0.3, 1.0, 4.0, 9.0]
X_COMPLEX = [1 + 1j, -3 + 2j, 4j, -0.5 - 5j]


def brute_force_oracle(n, s, x, terms=80):
    """Independent partial-sum oracle at 40 decimal digits."""
    return complex(mp.nsum(
        lambda k: mp.mpc(x) ** (n * int(k) + s) / mp.factorial(n * int(k) + s),
        [0, terms]))


# ------------------------------------------------------------- pinned values


def test_value_at_zero():
    for n in (1, 2, 3, 7):
        assert modexp_series(ModExpSpec(n, 0), 0.0) == 1.0
        assert modexp_roots(ModExpSpec(n, 0), 0.0) == pytest.approx(1.0, abs=1e-14)
        for s in range(1, n):
            assert modexp_series(ModExpSpec(n, s), 0.0) == 0.0
            assert modexp_roots(ModExpSpec(n, s), 0.0) == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize("x", X_REAL)
def test_mod2_is_cosh_and_sinh(x):
    scale = 1e-12 * math.exp(abs(x))
    assert abs(modexp_series(ModExpSpec(2, 0), x) - math.cosh(x)) < scale
    assert abs(modexp_series(ModExpSpec(2, 1), x) - math.sinh(x)) < scale
    assert abs(modexp_roots(ModExpSpec(2, 0), x) - math.cosh(x)) < scale
    assert abs(modexp_roots(ModExpSpec(2, 1), x) - math.sinh(x)) < scale


def test_mod3_residue_zero_at_one_frozen():
    # brute-force oracle value of sum 1/(3k)!: 1.16805831337591852...
    expected = 1.1680583133759185
    assert brute_force_oracle(3, 0, 1.0).real == pytest.approx(expected, abs=1e-15)
    assert modexp_series(ModExpSpec(3, 0), 1.0) == pytest.approx(expected, abs=1e-14)
    assert modexp_roots(ModExpSpec(3, 0), 1.0).real == pytest.approx(expected, abs=1e-14)


def test_mod4_components_at_one_frozen():
    # frozen from the same brute-force oracle
    expected = [1.0416914703416917, 1.0083360892258490,
                0.5013891644735520, 0.1668651044179525]
    for s, value in enumerate(expected):
        assert brute_force_oracle(4, s, 1.0).real == pytest.approx(value, abs=1e-15)
        assert modexp_series(ModExpSpec(4, s), 1.0) == pytest.approx(value, abs=1e-14)


def test_n1_is_plain_exponential():
    for x in (0.0, 1.0, -3.0, 2 + 1j):
        assert modexp_series(ModExpSpec(1, 0), x) == pytest.approx(cmath.exp(x), rel=1e-14)
        assert modexp_roots(ModExpSpec(1, 0), x) == pytest.approx(cmath.exp(x), rel=1e-14)


# --------------------------------------------------------- series vs oracle


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 12])
@pytest.mark.parametrize("x", X_REAL + X_COMPLEX)
def test_series_matches_brute_force(n, x):
    for s in range(n):
        expected = brute_force_oracle(n, s, x)
        assert modexp_series(ModExpSpec(n, s), x) == pytest.approx(
            expected, abs=1e-13 * max(1.0, math.exp(abs(x))))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 12])
@pytest.mark.parametrize("x", X_REAL + X_COMPLEX)
def test_two_evaluation_paths_agree(n, x):
    for s in range(n):
        series = modexp_series(ModExpSpec(n, s), x)
        roots = modexp_roots(ModExpSpec(n, s), x)
        assert abs(series - roots) < 1e-12 * max(1.0, math.exp(abs(x)))


@pytest.mark.parametrize("n", [1, 2, 3, 5, 9])
@pytest.mark.parametrize("x", X_REAL + X_COMPLEX)
def test_components_partition_the_exponential(n, x):
    total = sum(modexp_all(n, x))
    assert abs(total - cmath.exp(x)) < 1e-12 * math.exp(abs(x))


def test_positivity_for_positive_real_argument():
    for n in (1, 2, 3, 6):
        for x in (0.1, 1.0, 4.0, 8.5):
            for s in range(n):
                assert modexp_series(ModExpSpec(n, s), x) > 0.0


def test_roots_path_zeroes_imaginary_part_on_real_input():
    for n in (2, 3, 5):
        for s in range(n):
            assert modexp_roots(ModExpSpec(n, s), 2.5).imag == 0.0


def test_complex_input_returned_untouched():
    value = modexp_roots(ModExpSpec(3, 1), 1 + 1e-18j)
    assert isinstance(value, complex)  # tiny imaginary parts are not scrubbed


# ------------------------------------------------------ derivative structure


def test_derivative_residue_steps_down_cyclically():
    assert derivative_residue(ModExpSpec(4, 3)) == ModExpSpec(4, 2)
    assert derivative_residue(ModExpSpec(4, 0)) == ModExpSpec(4, 3)
    assert derivative_residue(ModExpSpec(5, 2), order=2) == ModExpSpec(5, 0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_nfold_derivative_is_identity(n):
    for s in range(n):
        spec = ModExpSpec(n, s)
        stepped = spec
        for _ in range(n):
            stepped = derivative_residue(stepped)
        assert stepped == spec
        assert derivative_residue(spec, order=n) == spec


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
@pytest.mark.parametrize("x", [-4.0, -1.5, 0.3, 2.0, 4.0])
def test_derivative_matches_central_differences(n, x):
    h = 1e-5
    for s in range(n):
        spec = ModExpSpec(n, s)
        numeric = (modexp_series(spec, x + h) - modexp_series(spec, x - h)) / (2 * h)
        exact = modexp_series(derivative_residue(spec), x)
        assert abs(numeric - exact) < 1e-8


def test_initial_values_are_kronecker_delta():
    # j-th derivative of f_s at 0 equals delta_{j s} for 0 <= j, s < n
    for n in (2, 3, 5):
        for s in range(n):
            for j in range(n):
                value = modexp_series(derivative_residue(ModExpSpec(n, s), order=j), 0.0)
                assert value == (1.0 if j == s else 0.0)


# ------------------------------------------------------------------- errors


def test_spec_validation():
    with pytest.raises(ValueError):
        ModExpSpec(0, 0)
    with pytest.raises(ValueError):
        ModExpSpec(3, 3)
    with pytest.raises(ValueError):
        ModExpSpec(3, -1)
    with pytest.raises(ValueError):
        modexp_all(0, 1.0)


def test_non_finite_argument_rejected():
    with pytest.raises(ValueError):
        modexp_series(ModExpSpec(2, 0), float("inf"))
    with pytest.raises(ValueError):
        modexp_roots(ModExpSpec(2, 0), float("nan"))


def test_series_cap_is_an_explicit_error():
    with pytest.raises(SeriesCapError):
        modexp_series(ModExpSpec(2, 0), 1e8)
