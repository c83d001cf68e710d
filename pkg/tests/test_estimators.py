import math

import numpy as np
import pytest
from loguru import logger
from pydantic import ValidationError

from rotation_toolkit.domain.circle import LiftParams
from rotation_toolkit.domain.reports import OrbitTrace
from rotation_toolkit.errors import UnsupportedModelError
from rotation_toolkit.estimators.ergodic import ergodic_formula_check
from rotation_toolkit.estimators.orbit import orbit_rotation
from rotation_toolkit.estimators.rotation import OffsetSampler, nonuniform_orbit, rho_estimate, rho_nonuniform
from rotation_toolkit.estimators.statistics import batch_means_se, empirical_measure
from rotation_toolkit.fixtures import build_perturbed_family
from rotation_toolkit.homeo.families import Rotation
from rotation_toolkit.systems.models import FiniteIID, RandomSystem


def test_example1_rho_is_zero(example1):
    report = rho_estimate(example1, LiftParams(q=0.0, alpha=0.0), 0.0, 4000)
    assert abs(report.value) <= 1e-9


def test_example1_orbit_rotation(example1):
    report, trace = orbit_rotation(example1, 0.125, 4000)
    assert report.value == pytest.approx(0.25, abs=1e-12)
    assert trace.gammas[:9] == [(2 * n + 1) / 8 for n in range(9)]

    fixed, _ = orbit_rotation(example1, 0.0, 4000)
    assert fixed.value == pytest.approx(0.0, abs=1e-12)


def test_example1_integer_alpha(example1):
    for alpha in (-2.0, 1.0, 3.0):
        report = rho_estimate(example1, LiftParams(q=0.0, alpha=alpha), 0.0, 400)
        assert report.value == pytest.approx(alpha, abs=1e-9)


def test_rotation_rho_uses_window():
    system = RandomSystem(model=FiniteIID(maps=(Rotation(theta=0.25),), probs=(1.0,)))
    assert rho_estimate(system, LiftParams(q=0.0, alpha=0.0), 0.0, 100).value == pytest.approx(0.25)
    assert rho_estimate(system, LiftParams(q=0.0, alpha=-1.0), 0.0, 100).value == pytest.approx(-0.75)


def test_intro_rho(intro):
    report = rho_estimate(intro, LiftParams(q=0.0, alpha=0.0), 0.0, 100_000)
    assert report.value == pytest.approx(0.15, abs=0.0025)
    assert report.se_proxy == pytest.approx(0.5 * math.sqrt(0.21 / 100_000), rel=0.5)


@pytest.mark.slow
def test_intro_rho_acceptance(intro):
    report = rho_estimate(intro, LiftParams(q=0.0, alpha=0.0), 0.0, 1_000_000)
    assert report.value == pytest.approx(0.15, abs=0.0007)


def _check_start_point_independence(rng, systems):
    n = 10_000
    for key in range(systems):
        system = build_perturbed_family(c0=rng.uniform(-0.5, 0.5), epsilon=0.1, seed=key)
        params = LiftParams(q=rng.uniform(0.0, 1.0), alpha=rng.uniform(-1.0, 1.0))
        x0, y0 = rng.uniform(-1.0, 1.0, size=2)
        difference = rho_estimate(system, params, x0, n).value - rho_estimate(system, params, y0, n).value
        assert abs(difference) <= 2.0 / n


def test_rho_independent_of_start_point(rng):
    _check_start_point_independence(rng, 20)


@pytest.mark.slow
def test_rho_independent_of_start_point_acceptance(rng):
    _check_start_point_independence(rng, 100)


def test_nonuniform_telescoping(perturbed):
    offsets = OffsetSampler(values=(0, 1, -1), probs=(0.5, 0.3, 0.2))
    params = LiftParams(q=0.0, alpha=0.0)
    trace = nonuniform_orbit(perturbed, params, offsets, 0.0, 2000)
    partial = np.cumsum([0, *trace.offsets])
    residuals = np.asarray(trace.shifted) - np.asarray(trace.uniform) - partial
    assert np.max(np.abs(residuals)) <= 1e-9

    report = rho_nonuniform(perturbed, params, offsets, 0.0, 10_000)
    assert abs(report.extras["telescoping_residual"]) <= 1e-9
    assert report.value - report.extras["uniform_value"] - report.extras["offset_mean"] == pytest.approx(0.0, abs=1e-12)
    assert report.extras["offset_mean"] == pytest.approx(offsets.mean, abs=0.03)


def test_offset_sampler_validates():
    with pytest.raises(ValidationError):
        OffsetSampler(values=(0, 1), probs=(0.5, 0.4))


def test_orbit_trace_requires_increments_in_unit_interval():
    OrbitTrace(gammas=[0.5, 0.7, 1.2])
    with pytest.raises(ValidationError):
        OrbitTrace(gammas=[0.5, 0.4])
    with pytest.raises(ValidationError):
        OrbitTrace(gammas=[0.1, 1.3])


def test_orbit_rotation_of_rotation():
    system = RandomSystem(model=FiniteIID(maps=(Rotation(theta=0.3),), probs=(1.0,)))
    report, trace = orbit_rotation(system, 0.2, 1000)
    assert report.value == pytest.approx(0.3, abs=1e-12)
    assert len(trace.gammas) == 1001


def test_batch_means_se(rng):
    samples = rng.standard_normal(10_000)
    assert batch_means_se(samples) == pytest.approx(0.01, rel=0.3)
    assert math.isnan(batch_means_se(np.array([1.0])))


def test_batch_means_se_warns_when_samples_are_dropped():
    messages = []
    sink = logger.add(messages.append, level="WARNING", format="{message}")
    try:
        batch_means_se(np.arange(16.0))
        assert messages == []
        batch_means_se(np.arange(10.0))
    finally:
        logger.remove(sink)
    assert len(messages) == 1
    assert "drop the last 2 of 10 samples" in messages[0]


def test_empirical_measure(rng):
    measure = empirical_measure(rng.random(100_000), 10)
    assert math.fsum(measure.weights) == pytest.approx(1.0)
    assert max(abs(w - 0.1) for w in measure.weights) < 0.01
    assert measure.integrate(measure.centers) == pytest.approx(0.5, abs=0.01)


def test_ergodic_formula_check(perturbed):
    check = ergodic_formula_check(perturbed, LiftParams(q=0.0, alpha=0.0), 20_000, 20_000, 100)
    assert check.residual <= 4.0 * check.combined_se + 0.005


def test_ergodic_formula_check_needs_iid_base(example1):
    with pytest.raises(UnsupportedModelError):
        ergodic_formula_check(example1, LiftParams(), 100, 100, 10)
