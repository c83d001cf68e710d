import math

import numpy as np
import pytest
from pydantic import ValidationError

from rotation_toolkit.circle.arithmetic import cover, unit_increment
from rotation_toolkit.homeo.families import (
    Composite,
    DeterministicFlow,
    NorthSouthFlow,
    PerturbedRotation,
    PiecewiseLinear,
    Projective,
    Rotation,
)
from rotation_toolkit.homeo.operations import compose, eval_lift, eval_lift_grid, validate
from rotation_toolkit.homeo.storage import read_piecewise_linear, write_piecewise_linear
from rotation_toolkit.sde.presets import north_south_field


def test_canonical_lift_is_normalized_at_zero():
    assert eval_lift(Rotation(theta=1.3), 0.0) == pytest.approx(0.3)
    assert eval_lift(Rotation(theta=-0.2), 0.0) == pytest.approx(0.8)
    assert eval_lift(Rotation(theta=-0.2), 1.0) == pytest.approx(1.8)


def test_piecewise_linear_hits_knots_exactly():
    f = PiecewiseLinear(points=[("0", "0"), ("1/8", "3/8")])
    assert eval_lift(f, 0.125) == 0.375
    assert eval_lift(f, 1.125) == 1.375
    assert eval_lift(f, 0.0625) == pytest.approx(0.1875)
    assert validate(f, grid_size=256)


def test_piecewise_linear_rejects_unsorted_knots():
    with pytest.raises(ValidationError):
        PiecewiseLinear(points=[(0.5, 0.5), (0.25, 0.75)])
    with pytest.raises(ValidationError):
        PiecewiseLinear(points=[(0.0, 0.0), (1.0, 1.0)])


def test_validate_rejects_decreasing_map():
    f = PiecewiseLinear(points=[(0.0, 0.0), (0.5, 0.6), (0.6, 0.4)])
    assert not validate(f, grid_size=256)


def test_projective_diagonal_matrix():
    f = Projective(matrix=((2.0, 0.0), (0.0, 0.5)))
    expected = math.atan2(0.5 * math.sin(math.pi / 4), 2.0 * math.cos(math.pi / 4)) / (2 * math.pi)
    assert eval_lift(f, 0.125) == pytest.approx(expected, abs=1e-12)
    assert eval_lift(f, 0.0) == 0.0
    assert eval_lift(f, 0.5) == pytest.approx(0.5, abs=1e-12)
    assert validate(f, grid_size=512)


def test_projective_rotation_matrix_is_quarter_turn():
    f = Projective(matrix=((0.0, -1.0), (1.0, 0.0)))
    for x in (0.0, 0.1, 0.7, 1.3):
        assert eval_lift(f, x) == pytest.approx(x + 0.25, abs=1e-12)


def test_projective_with_negative_determinant_is_invalid():
    f = Projective(matrix=((1.0, 0.0), (0.0, -1.0)))
    assert not validate(f, grid_size=64)


def test_perturbed_rotation_epsilon_bound():
    with pytest.raises(ValidationError):
        PerturbedRotation(c=0.1, epsilon=0.2)
    assert validate(PerturbedRotation(c=0.1, epsilon=0.15), grid_size=512)


def test_north_south_flow_closed_form():
    f = NorthSouthFlow(delta_t=0.1)
    assert eval_lift(f, 0.0) == 0.0
    assert eval_lift(f, 0.5) == 0.5
    expected = math.atan(math.exp(-2 * math.pi * 0.1)) / math.pi
    assert eval_lift(f, 0.25) == pytest.approx(expected, abs=1e-14)
    assert eval_lift(f, 0.75) == pytest.approx(1.0 - expected, abs=1e-14)
    assert validate(f, grid_size=512)


@pytest.mark.parametrize("s0", [0.25, 0.75, 0.4, 0.9])
def test_north_south_increments_match_direct_iteration(s0):
    f = NorthSouthFlow(delta_t=0.1)
    increments = f.orbit_increments(s0, 100)
    s = s0
    for step in range(100):
        image = eval_lift(f, s)
        assert increments[step] == pytest.approx(unit_increment(image - s), abs=1e-12)
        s = cover(image)


def test_north_south_increments_survive_underflow():
    f = NorthSouthFlow(delta_t=0.1)
    above = f.orbit_increments(0.25, 5000)
    below = f.orbit_increments(0.75, 5000)
    # far past the point where the distance to the sink underflows
    assert np.all(above[2000:] == np.nextafter(1.0, 0.0))
    assert np.all(below[2000:] == 0.0)
    assert np.all(f.orbit_increments(0.0, 10) == 0.0)
    assert np.all(f.orbit_increments(0.5, 10) == 0.0)


def test_heun_flow_matches_north_south_closed_form():
    flow = DeterministicFlow(drift=north_south_field().drift, delta_t=0.1, substeps=1000)
    assert eval_lift(flow, 0.25) == pytest.approx(eval_lift(NorthSouthFlow(delta_t=0.1), 0.25), abs=1e-6)


def test_compose_rotations_stays_rotation():
    composed = compose(Rotation(theta=0.2), Rotation(theta=0.3))
    assert isinstance(composed, Rotation)
    assert composed.theta == pytest.approx(0.5)


def test_compose_general_maps():
    g = PerturbedRotation(c=0.4, epsilon=0.05)
    f = PiecewiseLinear(points=[(0.0, 0.0), (0.25, 0.5)])
    composed = compose(g, f)
    assert isinstance(composed, Composite)
    for x in (0.1, 0.3, 0.9):
        assert cover(eval_lift(composed, x)) == pytest.approx(cover(eval_lift(g, eval_lift(f, x))), abs=1e-12)
    assert 0.0 <= eval_lift(composed, 0.0) < 1.0
    assert validate(composed, grid_size=256)


def test_eval_lift_grid_matches_pointwise():
    f = PerturbedRotation(c=0.3, epsilon=0.1)
    xs = [0.0, 0.2, 0.4]
    assert eval_lift_grid(f, xs).tolist() == [eval_lift(f, x) for x in xs]


def test_piecewise_linear_file_format(tmp_path):
    path = tmp_path / "f.yaml"
    path.write_text("winding: 1\npoints:\n  - ['0', '0']\n  - ['3/8', '5/8']\n", encoding="utf-8")
    f = read_piecewise_linear(path)
    assert f.winding == 1
    assert eval_lift(f, 0.375) == 0.625

    copy = tmp_path / "copy.yaml"
    write_piecewise_linear(f, copy)
    assert read_piecewise_linear(copy) == f
