try:
    from importlib.metadata import version, PackageNotFoundError
    __version__ = version('msirs')
except PackageNotFoundError:  # running from a source tree
    __version__ = '0.0.0'

# import me:
# import msirs

# Field
from .gf import Field, field_new

# Codec
from .rs import RsCode, rs_code, encode, decode, syndromes, DecodeStatus, DecodeResult

# Interleaving and two-pass decoding
from .irs import InterleaverConfig, interleave, deinterleave, position_map, stream_position
from .irs import DecoderKind, FrameOutcome, BurstWindow, first_pass, infer_burst_window, decode_frame, prepare_decoder
from .irs import Scheme, BurstCase, becc_bits, latency, bl_candidates, burst_sweep

# Physical layer
from .phy import ChannelConfig, pam3_map, pam3_demap, channel_apply, noise_inject, dfe_equalize

# Simulation
from .sim import ExperimentConfig, SchemeConfig, load_config, run_experiment, emit_results, parse_results
