"""Range scans: one row of exact statistics per prime p = 3 (mod 4).

Output is deterministic for a given range regardless of worker count: the
range is cut into contiguous blocks, workers compute whole blocks, and rows
are emitted in block order.  Every row value is an exact integer.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .arith import OddPrime, primes_in_range
from .classnum import h_from_forms
from .residues import residue_profile
from .sums import sum_record

CSV_HEADER = "p,class_mod8,q_o,q_e,A,M,T,C,h,s_low,s_high,even_lo,even_hi"


@dataclass(frozen=True)
class ScanRow:
    p: int
    class_mod8: int
    q_o: int
    q_e: int
    a_value: int
    m_value: int
    t_value: int
    c_value: int
    h: int
    s_low: int
    s_high: int
    even_below_half: int
    even_above_half: int


def compute_row(p: OddPrime) -> ScanRow:
    prof = residue_profile(p)
    rec = sum_record(p, prof)
    return ScanRow(
        p=p.value,
        class_mod8=p.class_mod8,
        q_o=prof.q_o,
        q_e=prof.q_e,
        a_value=rec.a_value,
        m_value=rec.m_value,
        t_value=rec.t_value,
        c_value=rec.c_value,
        h=h_from_forms(p),
        s_low=prof.s_low,
        s_high=prof.s_high,
        even_below_half=prof.even_below_half,
        even_above_half=prof.even_above_half,
    )


def _rows_for_block(block: tuple[int, int]) -> list[ScanRow]:
    lo, hi = block
    return [compute_row(p) for p in primes_in_range(lo, hi, mod4=3)]


def _blocks(lo: int, hi: int, jobs: int) -> list[tuple[int, int]]:
    # contiguous, covering [lo, hi]; a few blocks per worker for balance
    count = max(1, jobs * 4)
    span = hi - lo + 1
    width = max(1, -(-span // count))
    return [(a, min(a + width - 1, hi)) for a in range(lo, hi + 1, width)]


def scan_rows(lo: int, hi: int, jobs: int = 1) -> Iterator[ScanRow]:
    """Rows for all primes p = 3 (mod 4) in [lo, hi], ascending."""
    lo = max(lo, 3)
    if hi < lo:
        return
    if jobs <= 1:
        for p in primes_in_range(lo, hi, mod4=3):
            yield compute_row(p)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for rows in pool.map(_rows_for_block, _blocks(lo, hi, jobs)):
            yield from rows


def row_as_dict(row: ScanRow) -> dict[str, int]:
    """Field order and names match the CSV columns."""
    return {
        "p": row.p,
        "class_mod8": row.class_mod8,
        "q_o": row.q_o,
        "q_e": row.q_e,
        "A": row.a_value,
        "M": row.m_value,
        "T": row.t_value,
        "C": row.c_value,
        "h": row.h,
        "s_low": row.s_low,
        "s_high": row.s_high,
        "even_lo": row.even_below_half,
        "even_hi": row.even_above_half,
    }


def write_csv(rows: Iterable[ScanRow], fh: IO[str]) -> None:
    fh.write(CSV_HEADER + "\n")
    for row in rows:
        fh.write(",".join(str(v) for v in row_as_dict(row).values()) + "\n")


def write_json(rows: Iterable[ScanRow], fh: IO[str]) -> None:
    fh.write("[")
    first = True
    for row in rows:
        fh.write("\n  " if first else ",\n  ")
        fh.write(json.dumps(row_as_dict(row)))
        first = False
    fh.write("]\n" if first else "\n]\n")
