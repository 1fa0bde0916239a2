""" Physical layer: PAM3 mapping, dispersive channel, burst noise, DFE """

from .pam3 import Pam3Pair, MAPPING_TABLE, pam3_map, pam3_demap, symbols_to_levels, levels_to_symbols, mapper_symbols
from .channel import P_SIG, DEFAULT_TAPS, ChannelConfig, noise_variance, channel_apply, burst_mask, noise_inject
from .dfe import slice_level, dfe_equalize
