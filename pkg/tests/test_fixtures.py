import pytest

from rotation_toolkit.errors import FixtureError
from rotation_toolkit.estimators.orbit import orbit_rotation
from rotation_toolkit.fixtures import (
    FIXTURES,
    build_example1,
    build_fixture,
    build_intro,
    export_fixture_maps,
)
from rotation_toolkit.homeo.operations import eval_lift, validate
from rotation_toolkit.homeo.storage import read_piecewise_linear


def test_example1_maps_fix_zero_and_hit_constraints(example1):
    targets = [(0.125, 0.375), (0.375, 0.625), (0.625, 0.875), (0.875, 0.125)]
    for f, (x, y) in zip(example1.model.maps, targets):
        assert eval_lift(f, 0.0) == 0.0
        assert eval_lift(f, x) % 1.0 == y
        assert validate(f, grid_size=1024)


def test_example1_orbit_depends_on_start_angle(example1):
    periodic, trace = orbit_rotation(example1, 0.125, 8)
    assert trace.gammas == [(2 * n + 1) / 8 for n in range(9)]
    assert periodic.value == 0.25
    fixed, trace = orbit_rotation(example1, 0.0, 8)
    assert fixed.value == 0.0
    assert trace.gammas == [0.0] * 9


def test_example1_with_shifted_start():
    system = build_example1(start=1)
    _, trace = orbit_rotation(system, 0.375, 4)
    assert trace.gammas == [0.375, 0.625, 0.875, 1.125, 1.375]


def test_intro_system():
    system = build_intro(theta=0.5, p=0.3, seed=1)
    assert system.model.probs == pytest.approx((0.7, 0.3))
    assert [f.theta for f in system.model.maps] == [0.0, 0.5]


def test_build_fixture_by_name():
    assert set(FIXTURES) == {"example1", "intro", "north-south", "perturbed"}
    assert build_fixture("perturbed", seed=3).seed == 3
    with pytest.raises(FixtureError):
        build_fixture("unknown")


def test_export_fixture_maps(example1, tmp_path):
    paths = export_fixture_maps(example1, tmp_path)
    assert [path.name for path in paths] == ["f1.yaml", "f2.yaml", "f3.yaml", "f4.yaml"]
    assert read_piecewise_linear(paths[3]) == example1.model.maps[3]


def test_export_skips_non_piecewise_maps(intro, tmp_path):
    assert export_fixture_maps(intro, tmp_path) == []


def test_export_requires_finite_system(perturbed, tmp_path):
    with pytest.raises(FixtureError):
        export_fixture_maps(perturbed, tmp_path)
