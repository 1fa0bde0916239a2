""" Decision feedback equalizer for a known postcursor-only channel

Each sample has the postcursor ISI of the previous decisions subtracted, is scaled by 1/h[0], and sliced.
A wrong decision feeds back into the next ones: errors propagate.
"""
from collections import deque
from typing import Sequence

import numpy as np

# Slicer thresholds: |v| <= 0.5 is a zero
THRESHOLD = 0.5


def slice_level(v: float) -> int:
    """ Slice to {-1, 0, +1}; the thresholds themselves slice to 0 """
    if v > THRESHOLD:
        return 1
    elif v < -THRESHOLD:
        return -1
    else:
        return 0


def dfe_equalize(received: Sequence[float], taps: Sequence[float]) -> np.ndarray:
    """ Equalize and slice received samples

    z[i] = (y[i] - sum(h[k] * d[i-k] for k >= 1)) / h[0]
    d[i] = slice_level(z[i])

    Returns:
        decisions, int8 levels
    """
    h0 = float(taps[0])
    feedback = [float(h) for h in taps[1:]]
    # Past decisions, most recent first
    past = deque([0] * len(feedback), maxlen=len(feedback))

    decisions = np.empty(len(received), dtype=np.int8)
    for i, y in enumerate(received):
        isi = 0.0
        for h, d in zip(feedback, past):
            isi += h * d
        d = slice_level((float(y) - isi) / h0)
        decisions[i] = d
        if feedback:
            past.appendleft(d)
    return decisions
