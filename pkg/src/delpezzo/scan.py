"""Exhaustive-search front end: compiled kernel when available, fallback otherwise.

`projective_common_zero` drives every finite-field point search in the
package (isotropic vectors of quadric pairs, points on diagonal cubics,
index computations); `congruence_witness` drives the mod-p^3 insolubility
oracle.  Both enumerate candidates in a fixed documented order, so the
first witness is reproducible no matter which implementation runs.
"""

from __future__ import annotations

import os
from typing import Optional, Sequence

import numpy as np

from . import _scan_py
from .errors import BudgetError, InputError
from .ffield import FField

try:
    from . import _speedups
    HAVE_SPEEDUPS = True
except ImportError:  # compiled kernel is optional
    _speedups = None
    HAVE_SPEEDUPS = False

IMPLEMENTATIONS = {"python": _scan_py}
if HAVE_SPEEDUPS:
    IMPLEMENTATIONS["compiled"] = _speedups

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    raw = os.environ.get("DELPEZZO_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise InputError(f"bad DELPEZZO_BUDGET value {raw!r}") from exc
    return DEFAULT_BUDGET


def _kernel(impl: str | None):
    if impl is None:
        return _speedups if HAVE_SPEEDUPS else _scan_py
    try:
        return IMPLEMENTATIONS[impl]
    except KeyError:
        raise InputError(f"unknown scan implementation {impl!r}") from None


def projective_common_zero(field: FField, coeff_rows: Sequence[Sequence[int]],
                           degrees: Sequence[int], budget: int | None = None,
                           impl: str | None = None) -> Optional[tuple[int, ...]]:
    """First projective point (in enumeration order) killing every diagonal form.

    `coeff_rows[F][j]` is the field-element code of the j-th coefficient of
    form F, and `degrees[F]` its degree.  Representatives have their last
    nonzero coordinate equal to 1; strata are visited for that position
    0..r-1, earlier coordinates lexicographic by element code.
    """
    if not coeff_rows:
        raise InputError("no forms to scan")
    r = len(coeff_rows[0])
    if any(len(row) != r for row in coeff_rows) or len(degrees) != len(coeff_rows):
        raise InputError("shape mismatch between forms and degrees")
    if r < 1 or r > 32:
        raise InputError("supported number of variables is 1..32")
    budget = default_budget() if budget is None else budget
    if field.q ** (r - 1) > budget:
        raise BudgetError(
            f"scan of {field.q}^{r - 1} candidates exceeds budget {budget}")
    add_tab, mul_tab = field.tables()
    term_tabs = np.zeros((len(coeff_rows), r, field.q), dtype=np.int32)
    for F, (row, d) in enumerate(zip(coeff_rows, degrees)):
        if d < 1:
            raise InputError("form degree must be >= 1")
        powers = field.power_map(d)
        for j, c in enumerate(row):
            term_tabs[F, j] = mul_tab[c % field.q][powers]
    idx = _kernel(impl).first_common_zero(field.q, r, add_tab, term_tabs)
    if idx < 0:
        return None
    return decode_point(field.q, r, int(idx))


def decode_point(q: int, r: int, idx: int) -> tuple[int, ...]:
    """Invert the global enumeration index into a coordinate tuple."""
    ell = 0
    while idx >= q ** ell:
        idx -= q ** ell
        ell += 1
        if ell >= r:
            raise InputError("enumeration index out of range")
    coords = [0] * r
    coords[ell] = 1
    for j in range(ell - 1, -1, -1):
        coords[j] = idx % q
        idx //= q
    return tuple(coords)


def congruence_witness(p: int, a: int, budget: int | None = None,
                       impl: str | None = None) -> Optional[tuple[int, int, int, int]]:
    """First primitive solution of t0^3 + p t1^3 + p^2 t2^3 = a t3^3 mod p^3.

    Primitive means not all four entries divisible by p.  The kernels sweep
    the p^6 pairs (t0, t1); the (t2, t3) completions are folded into
    precomputed first-hit tables, so a None return exhausts all of
    (Z/p^3)^4.  The witness, when one exists, is the lexicographically
    least primitive solution.
    """
    if p < 2 or a % p == 0:
        raise InputError("need a prime p and a p-unit a")
    budget = default_budget() if budget is None else budget
    if p ** 6 > budget:
        raise BudgetError(f"congruence sweep of {p}^6 pairs exceeds budget {budget}")
    P3 = p ** 3
    cube = np.array([pow(t, 3, P3) for t in range(P3)], dtype=np.int64)
    ok_all = np.zeros(P3, dtype=np.uint8)
    ok_unit = np.zeros(P3, dtype=np.uint8)
    for t3 in range(P3):
        v = a * int(cube[t3]) % P3
        ok_all[v] = 1
        if t3 % p:
            ok_unit[v] = 1
    # first_all[v]: least t2 with some t3 solving v + p^2 t2^3 = a t3^3;
    # first_mixed[v]: same but t2 or t3 must be a unit (t0, t1 both multiples)
    base = (p * p % P3) * cube % P3
    t2_unit = (np.arange(P3) % p) != 0
    first_all = np.full(P3, -1, dtype=np.int32)
    first_mixed = np.full(P3, -1, dtype=np.int32)
    for v in range(P3):
        s = (v + base) % P3
        hits = ok_all[s].astype(bool)
        nz = np.flatnonzero(hits)
        if nz.size:
            first_all[v] = nz[0]
        mixed = np.flatnonzero(np.where(t2_unit, hits, ok_unit[s].astype(bool)))
        if mixed.size:
            first_mixed[v] = mixed[0]
    code = _kernel(impl).first_congruence_hit(p, cube, first_all, first_mixed)
    if code < 0:
        return None
    code = int(code)
    t2 = code % P3
    t1 = code // P3 % P3
    t0 = code // (P3 * P3)
    s = (int(cube[t0]) + p * int(cube[t1]) + p * p * int(cube[t2])) % P3
    prim012 = t0 % p or t1 % p or t2 % p
    for t3 in range(P3):
        if (prim012 or t3 % p) and a * int(cube[t3]) % P3 == s:
            return (t0, t1, t2, t3)
    raise AssertionError("kernel reported a hit with no completing t3")
