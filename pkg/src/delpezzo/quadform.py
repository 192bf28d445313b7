"""Diagonal quadratic forms: exact evaluation, pairings, and the
odd-degree-descent harness over finite fields.

The descent harness exercises the fact that a pair of quadratic forms with
a common isotropic vector over an odd-degree extension already has one over
the base field; over finite fields every instance of that statement is
decidable by exhaustive search, and any counterexample would expose a bug
in the search, never new mathematics.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional

from .errors import InputError, VerificationError
from .exact import Rat, SqrtCombo
from .ffield import FField, FFVector, get_field
from .scan import projective_common_zero


@dataclass(frozen=True)
class DiagQF:
    """A diagonal quadratic form Σ a_i·T_i² with nonzero rational coefficients."""

    coeffs: tuple[Fraction, ...]
    degree = 2

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if not coeffs:
            raise InputError("a form needs at least one variable")
        if any(c == 0 for c in coeffs):
            raise InputError("diagonal coefficients must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)


def evaluate(Q: DiagQF, v) -> SqrtCombo:
    """Q(v) = Σ a_i·v_i² computed exactly in the radical field."""
    if len(v) != len(Q):
        raise InputError(f"vector length {len(v)} != {len(Q)} variables")
    acc = SqrtCombo.zero()
    for a, x in zip(Q.coeffs, v):
        acc = acc + a * (x * x)
    return acc


def bilinear(Q: DiagQF, u, v) -> SqrtCombo:
    """The pairing Σ a_i·u_i·v_i (polarization without the factor 2)."""
    if len(u) != len(Q) or len(v) != len(Q):
        raise InputError("vector length mismatch")
    acc = SqrtCombo.zero()
    for a, x, y in zip(Q.coeffs, u, v):
        acc = acc + a * (x * y)
    return acc


def _reduce_coeffs(Q: DiagQF, field: FField) -> list[int]:
    return [field.from_rat(c) for c in Q.coeffs]


def evaluate_ff(Q: DiagQF, field: FField, coords) -> int:
    """Direct field-arithmetic evaluation, independent of the scan tables."""
    acc = 0
    for c, x in zip(_reduce_coeffs(Q, field), coords):
        acc = field.add(acc, field.mul(c, field.mul(x, x)))
    return acc


def find_common_isotropic(Q1: DiagQF, Q2: DiagQF, q: tuple[int, int],
                          budget: int | None = None,
                          impl: str | None = None) -> Optional[FFVector]:
    """First common isotropic vector of Q1, Q2 over F_{p^f}, if any.

    Exhaustive over projective representatives (last nonzero coordinate 1,
    earlier coordinates lexicographic), so absence is a proof of
    anisotropy of the pair over that field.  Requires odd p and p-unit
    coefficients.  Every returned witness is re-evaluated by direct field
    arithmetic before being reported.
    """
    p, f = q
    if p == 2:
        raise InputError("characteristic 2 is excluded")
    if len(Q1) != len(Q2):
        raise InputError("forms must have the same number of variables")
    field = get_field(p, f)
    rows = [_reduce_coeffs(Q1, field), _reduce_coeffs(Q2, field)]
    point = projective_common_zero(field, rows, [2, 2], budget=budget, impl=impl)
    if point is None:
        return None
    for Q in (Q1, Q2):
        if evaluate_ff(Q, field, point) != 0:
            raise VerificationError(
                f"scan produced {point} over F_{p}^{f} but re-evaluation is nonzero")
    return FFVector(p, f, point)


@dataclass(frozen=True)
class DescentReport:
    """Existence flags of a common isotropic vector over F_{q^k}, odd k."""

    p: int
    f: int
    exists: dict[int, bool] = dc_field(default_factory=dict)
    witnesses: dict[int, FFVector] = dc_field(default_factory=dict)

    @property
    def descent_consistent(self) -> bool:
        higher = any(v for k, v in self.exists.items() if k > 1)
        return (not higher) or self.exists.get(1, False)


def amer_brumer_check(Q1: DiagQF, Q2: DiagQF, q: tuple[int, int], kmax: int,
                      budget: int | None = None,
                      impl: str | None = None) -> DescentReport:
    """Test the odd-degree descent property over the tower F_{q^k}, odd k <= kmax.

    descent_consistent must come back True for every input; False would mean
    a common zero exists over an odd-degree extension but not over the base
    field, which the descent theorem forbids.
    """
    p, f = q
    if kmax < 1:
        raise InputError("kmax must be >= 1")
    exists: dict[int, bool] = {}
    witnesses: dict[int, FFVector] = {}
    for k in range(1, kmax + 1, 2):
        w = find_common_isotropic(Q1, Q2, (p, f * k), budget=budget, impl=impl)
        exists[k] = w is not None
        if w is not None:
            witnesses[k] = w
    return DescentReport(p=p, f=f, exists=exists, witnesses=witnesses)


def random_unit_pair(rng: random.Random, p: int, r: int = 4) -> tuple[DiagQF, DiagQF]:
    """A random pair of r-variable forms with unit coefficients mod p."""
    return (DiagQF([Rat(rng.randrange(1, p)) for _ in range(r)]),
            DiagQF([Rat(rng.randrange(1, p)) for _ in range(r)]))


def descent_suite(p: int, trials: int, kmax: int, seed: int = 0, r: int = 4,
                  budget: int | None = None, impl: str | None = None) -> list[DescentReport]:
    """Seeded batch of descent checks; raises if any trial is inconsistent."""
    rng = random.Random(seed)
    reports = []
    for _ in range(trials):
        Q1, Q2 = random_unit_pair(rng, p, r)
        report = amer_brumer_check(Q1, Q2, (p, 1), kmax, budget=budget, impl=impl)
        if not report.descent_consistent:
            raise VerificationError(
                f"descent inconsistency for {Q1.coeffs} / {Q2.coeffs} over F_{p}: "
                f"{report.exists}")
        reports.append(report)
    return reports
