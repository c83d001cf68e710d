import numpy as np
import pytest

from rotation_toolkit.fixtures import build_example1, build_intro, build_north_south, build_perturbed_family
from rotation_toolkit.sde.presets import constant_field, north_south_field


@pytest.fixture
def example1():
    return build_example1()


@pytest.fixture
def intro():
    return build_intro(seed=12345)


@pytest.fixture
def perturbed():
    return build_perturbed_family(seed=2024)


@pytest.fixture
def north_south():
    return build_north_south(delta_t=0.1)


@pytest.fixture
def const_vf():
    return constant_field(0.7, 0.5)


@pytest.fixture
def ns_vf():
    return north_south_field()


@pytest.fixture
def rng():
    return np.random.default_rng(8675309)
