"""Pure-Python (NumPy-vectorized) fallback for the scan kernels.

Must agree with delpezzo._speedups candidate for candidate: same
enumeration order, same first witness, same primitivity handling.
Blocks grow geometrically so that early witnesses stay cheap while full
scans still run at vector throughput.
"""

from __future__ import annotations

import numpy as np

_BLOCK_START = 1 << 10
_BLOCK_MAX = 1 << 16


def first_common_zero(q: int, r: int, add_tab: np.ndarray,
                      term_tabs: np.ndarray) -> int:
    nforms = term_tabs.shape[0]
    offset = 0
    for ell in range(r):
        size = q ** ell
        start = 0
        block = _BLOCK_START
        while start < size:
            stop = min(start + block, size)
            idx = np.arange(start, stop, dtype=np.int64)
            digits = [(idx // q ** (ell - 1 - j)) % q for j in range(ell)]
            acc = np.full(idx.shape, term_tabs[0, ell, 1], dtype=np.int32)
            for j in range(ell):
                acc = add_tab[acc, term_tabs[0, j][digits[j]]]
            hits = np.flatnonzero(acc == 0)
            for F in range(1, nforms):
                if hits.size == 0:
                    break
                acc = np.full(hits.shape, term_tabs[F, ell, 1], dtype=np.int32)
                for j in range(ell):
                    acc = add_tab[acc, term_tabs[F, j][digits[j][hits]]]
                hits = hits[acc == 0]
            if hits.size:
                return offset + start + int(hits[0])
            start = stop
            block = min(block * 8, _BLOCK_MAX)
        offset += size
    return -1


def first_congruence_hit(p: int, cube: np.ndarray, first_all: np.ndarray,
                         first_mixed: np.ndarray) -> int:
    P3 = cube.shape[0]
    cubes = cube.tolist()
    firsts_all = first_all.tolist()
    firsts_mixed = first_mixed.tolist()
    for t0 in range(P3):
        c0 = cubes[t0]
        t0_unit = t0 % p != 0
        for t1 in range(P3):
            c01 = (c0 + p * cubes[t1]) % P3
            t2 = firsts_all[c01] if t0_unit or t1 % p != 0 else firsts_mixed[c01]
            if t2 >= 0:
                return (t0 * P3 + t1) * P3 + t2
    return -1
