""" Counter-based random streams

Every (seed, SBR point, frame, stream) has its own Philox generator, so a frame's data and noise
do not depend on what ran before it, on how frames are split between workers, or on the scheme.
"""
import numpy as np

# Streams
STREAM_DATA = 0
STREAM_NOISE = 1


def frame_rng(seed: int, sbr_index: int, frame_index: int, stream: int) -> np.random.Generator:
    """ The random generator for one stream of one frame """
    seq = np.random.SeedSequence(seed, spawn_key=(sbr_index, frame_index, stream))
    return np.random.Generator(np.random.Philox(seq))
