""" Link simulation: configuration, Monte-Carlo runs, results """

from .config import ConfigError, SchemeConfig, SbrSweep, ExperimentConfig, parse_flat_config, apply_flat_config
from .presets import PRESETS, PRESET_TAPS
from .loader import load_config
from .rng import frame_rng, STREAM_DATA, STREAM_NOISE
from .experiment import ResultRow, run_experiment, group_schemes, simulate_frames
from .results import emit_results, parse_results, clopper_pearson, format_report
