"""Diagonal cubic surfaces: minimality criterion and local insolubility.

For a surface a₀T₀³ + a₁T₁³ + a₂T₂³ + a₃T₃³ = 0 the criterion that no
ratio a_m·a_n/(a_p·a_q) is a rational cube guarantees minimality.  The
local machinery handles the family T₀³ + pT₁³ + p²T₂³ − aT₃³: when
p ≡ 1 (mod 3) and a is not a cube mod p, the distinct valuations of the
first three terms force any p-adic point to produce a cube root of a in
the residue field, which is impossible; the same valuation pattern
survives any extension of ramification degree prime to 3, reducing the
extension statement to cube tests in residue fields F_{p^f}.

An exhaustive sweep of primitive 4-tuples mod p³ cross-checks the
criterion: a p-adic point would scale to a primitive solution at that
precision, so the sweep must come up empty whenever the criterion holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import InputError
from .exact import DEFAULT_FACTOR_BOUND, factorize
from .ffield import FFVector, get_field, is_prime
from .scan import congruence_witness, projective_common_zero


@dataclass(frozen=True)
class DiagCubic:
    """a₀T₀³ + a₁T₁³ + a₂T₂³ + a₃T₃³ with nonzero rational coefficients."""

    coeffs: tuple[Fraction, ...]
    degree = 3

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != 4:
            raise InputError("a diagonal cubic surface has 4 coefficients")
        if any(c == 0 for c in coeffs):
            raise InputError("coefficients must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)


@dataclass(frozen=True)
class LocalSpec:
    """Parameters (p, a) of the local family, with a residue-degree bound."""

    p: int
    a: int
    fmax: int = 10

    def __post_init__(self):
        if not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")
        if gcd(self.a, self.p) != 1:
            raise InputError(f"a = {self.a} must be prime to p = {self.p}")
        if self.fmax < 1:
            raise InputError("fmax must be >= 1")

    def surface(self) -> DiagCubic:
        return DiagCubic([1, self.p, self.p**2, -self.a])


def is_cube_rational(q: Fraction | int, bound: int = DEFAULT_FACTOR_BOUND) -> bool:
    """Whether q lies in Q^×3: every prime exponent ≡ 0 mod 3 (sign absorbs)."""
    q = Fraction(q)
    if q == 0:
        raise InputError("0 is not in the unit group")
    for _, e in factorize(q.numerator, bound).items():
        if e % 3:
            return False
    for _, e in factorize(q.denominator, bound).items():
        if e % 3:
            return False
    return True


def segre_criterion(c: DiagCubic, bound: int = DEFAULT_FACTOR_BOUND) -> bool:
    """True when no ratio a_m·a_n/(a_p·a_q) is a rational cube.

    A ratio and its inverse are cubes together, so the three partitions of
    the index set into two pairs suffice.
    """
    a = c.coeffs
    for (m, n, p_, q_) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)]:
        if is_cube_rational(a[m] * a[n] / (a[p_] * a[q_]), bound):
            return False
    return True


def cube_in_ff(a: int, p: int, f: int) -> bool:
    """Whether a (a p-unit) is a cube in F_{p^f}.

    If p^f ≢ 1 mod 3 cubing is a bijection and everything is a cube;
    otherwise a is a cube iff a^((p^f−1)/3) = 1.  Since a sits in the prime
    subfield the exponentiation reduces to modular arithmetic in Z/p.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if gcd(a, p) != 1:
        raise InputError("a must be a p-unit")
    order = p**f - 1
    if order % 3:
        return True
    return pow(a, order // 3, p) == 1


@dataclass(frozen=True)
class LocalVerdict:
    criterion_holds: bool
    oracle_agrees: bool
    witness: Optional[tuple[int, int, int, int]]


def qp_insoluble(spec: LocalSpec, budget: int | None = None,
                 impl: str | None = None) -> LocalVerdict:
    """The residue-field criterion plus the mod-p³ exhaustive cross-check.

    criterion_holds: p ≡ 1 mod 3 and a is a non-cube mod p, which rules out
    p-adic points on T₀³ + pT₁³ + p²T₂³ = aT₃³.  oracle_agrees: the sweep of
    primitive 4-tuples mod p³ found no solution (a necessary condition for
    p-adic insolubility, so criterion_holds must imply it).
    """
    w = congruence_witness(spec.p, spec.a, budget=budget, impl=impl)
    criterion = spec.p % 3 == 1 and not cube_in_ff(spec.a, spec.p, 1)
    return LocalVerdict(criterion_holds=criterion, oracle_agrees=w is None, witness=w)


def prime_to_3_insoluble(spec: LocalSpec) -> bool:
    """Whether a stays a non-cube in F_{p^f} for every f ≤ fmax prime to 3.

    Together with the valuation argument this excludes points over every
    extension of degree prime to 3 in the ramification-times-residue range
    covered by fmax.
    """
    return all(not cube_in_ff(spec.a, spec.p, f)
               for f in range(1, spec.fmax + 1) if f % 3)


def ff_point_exists(c: DiagCubic, q: tuple[int, int], budget: int | None = None,
                    impl: str | None = None) -> Optional[FFVector]:
    """First projective point of the reduced cubic surface over F_{p^f}.

    Three is less than the number of variables, so a point always exists by
    the Chevalley–Warning count; a None return signals a bug upstream.
    """
    p, f = q
    field = get_field(p, f)
    row = [field.from_rat(x) for x in c.coeffs]
    point = projective_common_zero(field, [row], [3], budget=budget, impl=impl)
    if point is None:
        return None
    return FFVector(p, f, point)
