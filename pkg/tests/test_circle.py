import math

import pytest

from rotation_toolkit.circle.arithmetic import ceil_half_open, cover, floor_half_open, unit_increment
from rotation_toolkit.circle.lifts import deviation_at, lift_shift, normalize_lift
from rotation_toolkit.domain.circle import LiftParams
from rotation_toolkit.homeo.families import PerturbedRotation, Projective, Rotation


def _random_map(rng):
    if rng.random() < 0.5:
        return PerturbedRotation(c=rng.uniform(-3.0, 3.0), epsilon=rng.uniform(-0.15, 0.15))
    a, b, c = rng.uniform(0.3, 3.0), rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0)
    return Projective(matrix=((a, b), (c, (1.0 + b * c) / a)))


def test_cover_stays_in_unit_interval():
    assert cover(-0.25) == 0.75
    assert cover(3.5) == 0.5
    assert cover(-1e-20) == 0.0


def test_half_open_rounding_snaps_boundaries():
    assert ceil_half_open(2.0) == 2
    assert ceil_half_open(2.0 + 1e-13) == 2
    assert ceil_half_open(2.5) == 3
    assert floor_half_open(3.0 - 1e-13) == 3
    assert floor_half_open(2.5) == 2
    assert floor_half_open(-0.5) == -1


def test_unit_increment_is_below_one():
    assert unit_increment(-0.75) == 0.25
    assert unit_increment(1.25) == 0.25
    assert 0.0 <= unit_increment(-1e-20) < 1.0


def test_uniform_lift_lands_in_window(rng):
    for _ in range(200):
        f = _random_map(rng)
        params = LiftParams(q=rng.uniform(-2.0, 2.0), alpha=rng.uniform(-2.0, 2.0))
        value = normalize_lift(f, params).lift(params.q)
        assert params.alpha <= value < params.alpha + 1.0 + 1e-12


def test_deviation_bounds(rng):
    for _ in range(10_000):
        f = _random_map(rng)
        params = LiftParams(q=rng.uniform(-2.0, 2.0), alpha=rng.uniform(-2.0, 2.0))
        delta = deviation_at(f, params, rng.uniform(-5.0, 5.0))
        assert (params.alpha - params.q) - 1.0 < delta < (params.alpha - params.q) + 2.0


def _check_parameter_periodicity(rng, draws):
    for _ in range(draws):
        f = _random_map(rng)
        params = LiftParams(q=rng.uniform(-1.0, 1.0), alpha=rng.uniform(-1.0, 1.0))
        k, l = (int(v) for v in rng.integers(-3, 4, size=2))
        x = rng.uniform(0.0, 1.0)
        difference = deviation_at(f, params.shifted(k, l), x) - deviation_at(f, params, x)
        assert difference == pytest.approx(l - k, abs=1e-12)


def test_deviation_periodicity_in_parameters(rng):
    _check_parameter_periodicity(rng, 1000)


@pytest.mark.slow
def test_deviation_periodicity_in_parameters_acceptance(rng):
    _check_parameter_periodicity(rng, 10_000)


def test_deviation_is_periodic_in_x():
    f = PerturbedRotation(c=0.3, epsilon=0.1)
    params = LiftParams(q=0.2, alpha=-0.4)
    assert deviation_at(f, params, 7.25) == pytest.approx(deviation_at(f, params, 0.25), abs=1e-12)


def test_rotation_deviation_is_constant():
    deviation = normalize_lift(Rotation(theta=0.25), LiftParams(q=0.0, alpha=0.0))
    assert deviation.shift == 0
    assert deviation.evaluate(0.6) == pytest.approx(0.25)
    assert deviation.amplitude(grid_size=100) == pytest.approx(0.0, abs=1e-12)


def test_amplitude_of_perturbed_rotation():
    deviation = normalize_lift(PerturbedRotation(c=0.3, epsilon=0.1), LiftParams())
    assert deviation.amplitude() == pytest.approx(0.2, abs=1e-9)
    assert deviation.amplitude() < 1.0


def test_lift_shift_moves_window_by_integers():
    f = Rotation(theta=0.4)
    assert lift_shift(f, LiftParams(q=0.0, alpha=0.0)) == 0
    assert lift_shift(f, LiftParams(q=0.0, alpha=2.0)) == 2
    assert lift_shift(f, LiftParams(q=0.0, alpha=0.5)) == 1
    assert math.isclose(normalize_lift(f, LiftParams(q=0.0, alpha=0.5)).lift(0.0), 1.4)
