import numpy as np

from rotation_toolkit.domain.types import Stream

_DERIVE_TAG = 0xD1CE


def stream_generator(seed: int, stream: Stream | int) -> np.random.Generator:
    """Counter-based Philox generator for one named stream of an experiment seed."""
    sequence = np.random.SeedSequence(seed, spawn_key=(int(stream),))
    return np.random.Generator(np.random.Philox(sequence))


def derive_seed(seed: int, key: int) -> int:
    """A 64-bit seed for an independent replica, grid point or ladder rung."""
    sequence = np.random.SeedSequence(seed, spawn_key=(_DERIVE_TAG, int(key)))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])
