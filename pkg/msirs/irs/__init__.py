""" Interleaved RS codes: multiple-symbol interleaving and its two-pass decoder """

from .defs import DecoderKind, Scheme, BurstCase
from .interleaver import InterleaverConfig, StreamPosition
from .interleaver import interleave, deinterleave, position_map, segment_of, stream_position, segment_symbols
from .two_pass import BurstWindow, FrameOutcome
from .two_pass import first_pass, single_pass_frame, infer_burst_window, decode_frame, erasure_segments
from .decoders import FrameDecoderBase, SinglePass, TwoPass, DecoderT, prepare_decoder
from .analysis import becc_bits, LatencyBreakdown, latency, BlChoice, bl_candidates
from .sweep import SweepReport, burst_sweep
