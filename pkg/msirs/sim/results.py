""" Results: CSV output, CSV input, and a text report with confidence intervals

CSV format:

    # seed=1 psig=0.75 taps=1,0.45,0.25,0.12,0.05
    scheme,sbr_db,frames,info_bits,bit_errors,ber,block_errors,bler
    rs432_long,0,200,696600,1233,0.00177,12,0.06

Rows come sorted by (scheme, sbr_db), as `run_experiment` returns them.
"""
from __future__ import annotations

import csv
import io
from typing import Sequence, TextIO, Optional, List, Tuple, Dict, Union, Iterable
from pathlib import Path

import scipy.stats

from msirs.phy import P_SIG
from .experiment import ResultRow

COLUMNS = ('scheme', 'sbr_db', 'frames', 'info_bits', 'bit_errors', 'ber', 'block_errors', 'bler')


def emit_results(rows: Sequence[ResultRow], destination: Union[str, Path, TextIO, None] = None, *,
                 seed: int, taps: Iterable[float]) -> str:
    """ Format rows as CSV; write them to `destination`, if given

    Args:
        rows: result rows, written in the given order
        destination: a file name, or an open text file
        seed: experiment seed, recorded in the leading comment
        taps: channel taps, recorded in the leading comment
    Returns:
        the CSV text
    Raises:
        ValueError: no rows
        OSError: the destination cannot be written
    """
    if not rows:
        raise ValueError('No result rows to emit')

    buf = io.StringIO()
    buf.write(f'# seed={seed} psig={P_SIG:g} taps={",".join(f"{h:g}" for h in taps)}\n')
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow([
            row.scheme, f'{row.sbr_db:.6g}', row.frames, row.info_bits,
            row.bit_errors, f'{row.ber:.6g}', row.block_errors, f'{row.bler:.6g}',
        ])
    text = buf.getvalue()

    if isinstance(destination, (str, Path)):
        Path(destination).write_text(text)
    elif destination is not None:
        destination.write(text)
    return text


def parse_results(text: str) -> Tuple[List[ResultRow], Dict[str, str]]:
    """ Read CSV results back

    Returns:
        (rows, metadata from the leading comment)
    """
    meta: Dict[str, str] = {}
    lines = text.splitlines()
    while lines and lines[0].startswith('#'):
        for item in lines.pop(0)[1:].split():
            key, _, value = item.partition('=')
            meta[key] = value

    reader = csv.DictReader(lines)
    if tuple(reader.fieldnames or ()) != COLUMNS:
        raise ValueError(f'Unexpected CSV header: {reader.fieldnames}')
    rows = [
        ResultRow(
            scheme=record['scheme'],
            sbr_db=float(record['sbr_db']),
            frames=int(record['frames']),
            info_bits=int(record['info_bits']),
            bit_errors=int(record['bit_errors']),
            block_errors=int(record['block_errors']),
        )
        for record in reader
    ]
    return rows, meta


def clopper_pearson(errors: int, trials: int, confidence: float = 0.95) -> Tuple[float, float]:
    """ Exact binomial confidence interval for an error rate """
    alpha = 1 - confidence
    lo = scipy.stats.beta.ppf(alpha / 2, errors, trials - errors + 1) if errors > 0 else 0.0
    hi = scipy.stats.beta.ppf(1 - alpha / 2, errors + 1, trials - errors) if errors < trials else 1.0
    return float(lo), float(hi)


def format_report(rows: Sequence[ResultRow], confidence: float = 0.95) -> str:
    """ A text table: BLER per SBR point, one column per scheme, with confidence intervals """
    schemes: List[str] = []
    table: Dict[float, Dict[str, ResultRow]] = {}
    for row in rows:
        if row.scheme not in schemes:
            schemes.append(row.scheme)
        table.setdefault(row.sbr_db, {})[row.scheme] = row

    out = [f'BLER with {confidence:.0%} Clopper-Pearson intervals']
    out.append(' | '.join([f'{"sbr_db":>7}'] + [f'{scheme:>36}' for scheme in schemes]))
    for sbr_db in sorted(table):
        cells = [f'{sbr_db:>7g}']
        for scheme in schemes:
            row: Optional[ResultRow] = table[sbr_db].get(scheme)
            if row is None:
                cells.append(f'{"-":>36}')
                continue
            lo, hi = clopper_pearson(row.block_errors, row.frames, confidence)
            cells.append(f'{row.bler:>10.4g} [{lo:.4g}, {hi:.4g}] ({row.block_errors:>4})'.rjust(36))
        out.append(' | '.join(cells))
    return '\n'.join(out) + '\n'
