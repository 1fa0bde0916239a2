""" Command line: simulations and calculators

    msirs simulate --preset case1 --frames 1000 --out case1.csv --report
    msirs becc --scheme ms -L 3 -t 7 -BL 6 -m 9
    msirs latency --n 108 --k 96 --m 9 -L 4 --rate-bps 1e9 --decode-ns 120
    msirs burst-sweep --n 12 --k 4 --m 4 -L 3 --bl 3 --decoder two_pass
    msirs bl-table --n 144 --k 129 --m 9 -L 3
"""
from __future__ import annotations

import argparse
import logging
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import List, Optional

import pydantic

from msirs.irs import Scheme, BurstCase, DecoderKind, InterleaverConfig
from msirs.irs import becc_bits, latency, bl_candidates, burst_sweep
from msirs.rs import rs_code
from .config import ConfigError
from .experiment import run_experiment
from .loader import load_config
from .presets import PRESETS
from .results import emit_results, format_report

logger = logging.getLogger(__name__)

# Exit code for bad configuration
EXIT_CONFIG = 2


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level={0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )

    try:
        return args.command(args)
    except (ConfigError, pydantic.ValidationError, OSError) as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_CONFIG


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='msirs', description='Multiple-symbol interleaved RS codes')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='More logging: -v info, -vv debug')
    sub = parser.add_subparsers(dest='subcommand', required=True)

    p = sub.add_parser('simulate', help='Monte-Carlo BER/BLER sweep over SBR')
    source = p.add_mutually_exclusive_group()
    source.add_argument('--preset', choices=sorted(PRESETS))
    source.add_argument('--config', metavar='FILE', help='key = value configuration file')
    p.add_argument('--sbr-min', type=float, metavar='DB')
    p.add_argument('--sbr-max', type=float, metavar='DB')
    p.add_argument('--sbr-step', type=float, metavar='DB')
    p.add_argument('--frames', type=int, metavar='N', help='Frames per SBR point')
    p.add_argument('--seed', type=int, metavar='S')
    p.add_argument('--workers', type=int, metavar='N', help='Worker processes')
    p.add_argument('--out', metavar='FILE', help='CSV output; default: stdout')
    p.add_argument('--report', action='store_true', help='Print a BLER table with confidence intervals to stderr')
    p.set_defaults(command=cmd_simulate)

    p = sub.add_parser('becc', help='Burst error correction capability, bits')
    p.add_argument('--scheme', choices=['ss', 'ms'], required=True)
    p.add_argument('-L', type=int, required=True)
    p.add_argument('-t', type=int, required=True)
    p.add_argument('-BL', type=int, default=1)
    p.add_argument('-m', type=int, required=True)
    p.add_argument('--best-case', action='store_true', help='Burst aligned to a symbol/segment boundary')
    p.set_defaults(command=cmd_becc)

    p = sub.add_parser('latency', help='FEC latency, ns')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--m', type=int, required=True)
    p.add_argument('-L', type=int, required=True)
    p.add_argument('--rate-bps', type=Fraction, required=True)
    p.add_argument('--decode-ns', type=Fraction, default=Fraction(0))
    p.set_defaults(command=cmd_latency)

    p = sub.add_parser('burst-sweep', help='Exhaustive burst sweep: empirical BECC vs the formula')
    _code_args(p)
    p.add_argument('--bl', type=int, default=1)
    p.add_argument('--max-bits', type=int, help='Longest burst; default: formula value + 1')
    p.add_argument('--decoder', choices=[kind.value for kind in DecoderKind],
                   help='Default: single_pass for BL=1, two_pass otherwise')
    p.add_argument('--seed', type=int, default=0)
    p.set_defaults(command=cmd_burst_sweep)

    p = sub.add_parser('bl-table', help='Usable BL values for a code and their BECC')
    _code_args(p)
    p.set_defaults(command=cmd_bl_table)

    return parser


def cmd_simulate(args: argparse.Namespace) -> int:
    cfg = load_config(args.config, preset=args.preset, overrides={
        'sbr_min': args.sbr_min,
        'sbr_max': args.sbr_max,
        'sbr_step': args.sbr_step,
        'frames': args.frames,
        'seed': args.seed,
        'workers': args.workers,
    })
    logger.info('Simulating %s over %d SBR points, %d frames each, seed %d',
                ', '.join(scheme.label for scheme in cfg.schemes), len(cfg.sbr.points()),
                cfg.frames_per_point, cfg.seed)
    rows = run_experiment(cfg)
    text = emit_results(rows, args.out, seed=cfg.seed, taps=cfg.channel.taps)
    if args.out is None:
        sys.stdout.write(text)
    if args.report:
        sys.stderr.write(format_report(rows))
    return 0


def cmd_becc(args: argparse.Namespace) -> int:
    scheme = Scheme.SS_IRS if args.scheme == 'ss' else Scheme.MS_IRS
    BL = 1 if scheme == Scheme.SS_IRS else args.BL
    case = BurstCase.BEST if args.best_case else BurstCase.WORST
    with bad_arguments():
        bits = becc_bits(scheme, args.L, args.t, BL, args.m, case=case)
    print(bits)
    return 0


def cmd_latency(args: argparse.Namespace) -> int:
    with bad_arguments():
        res = latency(args.n, args.k, args.m, args.L, args.rate_bps, args.decode_ns)
    print(f'buffering_ns={float(res.buffering_ns):g}')
    print(f'receiving_ns={float(res.receiving_ns):g}')
    print(f'decoding_budget_ns={float(res.decoding_budget_ns):g}')
    print(f'total_ns={float(res.total_ns):g}')
    return 0


def cmd_burst_sweep(args: argparse.Namespace) -> int:
    with bad_arguments():
        code = rs_code(args.n, args.k, args.m)
        cfg = InterleaverConfig(args.L, args.bl, args.n)
    if args.decoder is not None:
        decoder = DecoderKind(args.decoder)
    else:
        decoder = DecoderKind.SINGLE_PASS if args.bl == 1 else DecoderKind.TWO_PASS

    with bad_arguments():
        if args.bl == 1 and decoder == DecoderKind.SINGLE_PASS:
            formula = becc_bits(Scheme.SS_IRS, args.L, code.t, 1, code.m)
        else:
            formula = becc_bits(Scheme.MS_IRS, args.L, code.t, args.bl, code.m)
    max_bits = args.max_bits if args.max_bits is not None else formula + 1

    report = burst_sweep(code, cfg, decoder, max_bits, seed=args.seed)
    print(f'formula_bits={formula}')
    print(f'empirical_bits={report.threshold}' + ('' if report.first_failure else '+'))
    if report.first_failure:
        length, start = report.first_failure
        print(f'first_failure={length} bits at bit {start}')
    return 0


def cmd_bl_table(args: argparse.Namespace) -> int:
    with bad_arguments():
        choices = bl_candidates(args.n, args.k, args.m, args.L)
    print('BL,becc_bits,random_reserve,recommended')
    for choice in choices:
        print(f'{choice.BL},{choice.becc_bits},{choice.random_reserve},{"yes" if choice.recommended else "no"}')
    return 0


def _code_args(p: argparse.ArgumentParser):
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--m', type=int, required=True)
    p.add_argument('-L', type=int, required=True)


@contextmanager
def bad_arguments():
    """ Report a ValueError from parameter checks as a usage error: exit code 2 """
    try:
        yield
    except ValueError as e:
        raise ConfigError(str(e)) from e
