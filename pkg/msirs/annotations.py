""" Annotations used here and there """

from typing import Sequence, List, Union

import numpy as np

# A word of symbols: a codeword, a message, an interleaved frame.
# Anything that numpy can turn into a 1-D integer array.
SymbolsT = Union[Sequence[int], np.ndarray]

# A polynomial over GF(2^m): coefficients, constant term first
Poly = List[int]
