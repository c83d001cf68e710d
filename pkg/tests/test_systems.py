import pytest
from pydantic import ValidationError

from rotation_toolkit.domain.types import Stream
from rotation_toolkit.homeo.families import Rotation
from rotation_toolkit.systems.models import FiniteCyclic, FiniteIID, ParametricIID, RandomSystem
from rotation_toolkit.systems.rng import derive_seed, stream_generator
from rotation_toolkit.systems.skew import iterate_skew, sample_map


def _thetas(system, n, stream=Stream.MAPS):
    return [f.theta for f in system.iter_maps(n, stream)]


def test_probabilities_must_sum_to_one():
    with pytest.raises(ValidationError):
        FiniteIID(maps=(Rotation(theta=0.0), Rotation(theta=0.5)), probs=(0.5, 0.6))
    with pytest.raises(ValidationError):
        FiniteIID(maps=(Rotation(theta=0.0),), probs=(0.5, 0.5))


def test_map_stream_is_reproducible(intro):
    assert _thetas(intro, 500) == _thetas(intro, 500)
    assert _thetas(intro, 500) != _thetas(intro.spawn(1), 500)


def test_named_streams_are_independent(intro):
    assert _thetas(intro, 200, Stream.MAPS) != _thetas(intro, 200, Stream.FRESH_MAPS)
    assert stream_generator(1, Stream.MAPS).random() != stream_generator(1, Stream.OFFSETS).random()


def test_derive_seed_is_deterministic():
    assert derive_seed(7, 3) == derive_seed(7, 3)
    assert derive_seed(7, 3) != derive_seed(7, 4)
    assert 0 <= derive_seed(7, 3) < 2**64


def test_sample_map_matches_iteration(intro):
    thetas = _thetas(intro, 50)
    assert [sample_map(intro, step).theta for step in (0, 17, 49)] == [thetas[0], thetas[17], thetas[49]]
    with pytest.raises(ValueError):
        sample_map(intro, -1)


def test_map_frequencies_follow_probabilities(intro):
    thetas = _thetas(intro, 100_000)
    frequency = sum(theta == 0.5 for theta in thetas) / len(thetas)
    assert frequency == pytest.approx(0.3, abs=0.006)


def test_cyclic_base_visits_maps_in_order():
    maps = tuple(Rotation(theta=t) for t in (0.1, 0.2, 0.3))
    system = RandomSystem(model=FiniteCyclic(maps=maps, start=1))
    assert _thetas(system, 5) == [0.2, 0.3, 0.1, 0.2, 0.3]
    assert not system.is_iid
    assert system.is_finite


def test_parametric_family_draws_in_range(perturbed):
    cs = [f.c for f in perturbed.iter_maps(10_000)]
    assert min(cs) >= 0.25 and max(cs) <= 0.35
    assert perturbed.is_iid and not perturbed.is_finite


def test_spawn_keeps_model(perturbed):
    child = perturbed.spawn(5)
    assert child.model == perturbed.model
    assert child.seed == derive_seed(perturbed.seed, 5)


def test_system_validates_from_mapping():
    system = RandomSystem.model_validate(
        {
            "model": {
                "kind": "finite_iid",
                "maps": [{"kind": "rotation", "theta": 0.1}, {"kind": "piecewise_linear", "points": [["0", "0"], ["1/2", "3/4"]]}],
                "probs": [0.25, 0.75],
            },
            "seed": 3,
        }
    )
    assert isinstance(system.model, FiniteIID)
    assert system.model.maps[1].points[1] == (0.5, 0.75)

    parametric = RandomSystem.model_validate({"model": {"kind": "parametric_iid", "family": {"c0": 0.1}}})
    assert isinstance(parametric.model, ParametricIID)


def test_skew_orbit_of_example1(example1):
    angles = [state.angle for state in iterate_skew(example1, 0.125, 8)]
    assert angles == [0.125, 0.375, 0.625, 0.875] * 2 + [0.125]
    assert [state.base_index for state in iterate_skew(example1, 0.125, 4)] == [0, 1, 2, 3, 0]
