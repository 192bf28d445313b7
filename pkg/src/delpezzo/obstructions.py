"""Numerical obstruction calculus on rank-one Picard surfaces.

On a surface whose Picard group is generated by a single class G with
K = λ·G, a curve in class n·G has arithmetic genus 1 + n(n+λ)·(G·G)/2 by
adjunction.  The parity of (Γ·(Γ+K))/2 is what blocks odd-degree
dominations from genus-zero curves: it is even for every class on the
del Pezzo surfaces of degree 4 and 2, and on a quartic with Pic = Z·H,
while the covering argument would force it odd.  The degree-formula audit
reproduces the companion mod-p bookkeeping: a dominant map of degree
prime to p keeps the invariant η nonzero, forcing the second projection
to have degree prime to p as well, which contradicts the vanishing of the
defining division-algebra class.

The finite-field index is the gcd of the extension degrees k ≤ Kmax over
which the reduced equations acquire a point, found by exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .errors import InputError
from .ffield import FFVector, get_field, is_prime
from .scan import projective_common_zero


@dataclass(frozen=True)
class PicRankOneSurface:
    """Descriptor (G·G, λ) of a surface with Pic = Z·G and K = λ·G."""

    gen_sq: int
    k_mult: int

    def __post_init__(self):
        if self.gen_sq == 0:
            raise InputError("generator self-intersection must be nonzero")


#: degree-4 del Pezzo (G = K, K·K = 4)
DP4 = PicRankOneSurface(4, 1)
#: degree-2 del Pezzo (G = K, K·K = 2)
DP2 = PicRankOneSurface(2, 1)
#: general quartic surface in P^3 (G = hyperplane class, K = 0)
K3_QUARTIC = PicRankOneSurface(4, 0)


def _half_pairing(S: PicRankOneSurface, n: int) -> int:
    """(Γ·(Γ+K))/2 for Γ = n·G, as an exact integer."""
    twice = n * (n + S.k_mult) * S.gen_sq
    if twice % 2:
        raise InputError(
            f"intersection number {twice} is odd; surface data inconsistent")
    return twice // 2


def adjunction_genus(S: PicRankOneSurface, n: int) -> int:
    """Arithmetic genus 1 + (Γ·(Γ+K))/2 of a curve in class n·G, n ≠ 0."""
    if n == 0:
        raise InputError("class 0 is not a curve class")
    return 1 + _half_pairing(S, n)


def parity_obstruction(S: PicRankOneSurface, n: int, ell: int) -> int:
    """(Γ·(Γ+K))/2 mod ell; residue 0 is the obstructed (impossible) case
    for a covering of degree prime to ell by a genus-zero curve."""
    if not is_prime(ell):
        raise InputError(f"{ell} is not prime")
    return _half_pairing(S, n) % ell


@dataclass(frozen=True)
class EulerCharResidue:
    residue: int
    unit: bool


def euler_char_congruence(chi_c: int, r: int, ell: int) -> EulerCharResidue:
    """r·χ(O_C) mod ell, flagged as a unit when nonzero.

    This is the Euler characteristic of the pushforward of the structure
    sheaf along a degree-r cover of C, up to a multiple of ell.
    """
    if not is_prime(ell):
        raise InputError(f"{ell} is not prime")
    residue = (r * chi_c) % ell
    return EulerCharResidue(residue=residue, unit=residue != 0)


@dataclass(frozen=True)
class GenusGap:
    delta: int
    odd: bool


def genus_gap_parity(p_a: int, p_g: int) -> GenusGap:
    """δ = p_a − p_g (the length of the conductor of the normalization)."""
    if p_g < 0 or p_a < p_g:
        raise InputError("need p_a >= p_g >= 0")
    delta = p_a - p_g
    return GenusGap(delta=delta, odd=delta % 2 == 1)


@dataclass(frozen=True)
class DegreeFormulaInstance:
    """Inputs to the mod-p degree-formula audit.

    n_x, n_y are the indices of the target variety and of the index-p
    division-algebra variety; eta_y is the latter's nonzero invariant mod p;
    deg_q and deg_r are the degrees of the two projections from the
    correspondence.
    """

    p: int
    n_x: int
    n_y: int
    eta_y: int
    deg_q: int
    deg_r: int = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")
        if self.n_x <= 0 or self.n_y <= 0:
            raise InputError("indices must be positive")
        if not 0 <= self.eta_y < self.p:
            raise InputError("eta_y must be reduced mod p")
        if self.deg_q < 0 or self.deg_r < 0:
            raise InputError("degrees are non-negative")


@dataclass(frozen=True)
class RostAudit:
    eta_ypp: int
    deg_r_constraint: str
    contradiction_with_brauer_injectivity: bool


def rost_audit(inst: DegreeFormulaInstance) -> RostAudit:
    """Replay the mod-p deduction chain of the degree formula.

    With deg q prime to p and η(Y) ≠ 0, the pullback η(Y″) = deg q·η(Y)
    stays nonzero, which forces deg r prime to p, which makes the induced
    map on p-torsion division-algebra classes injective — contradicting
    that the defining class dies in the function field of Y.
    """
    if inst.deg_q % inst.p == 0:
        raise InputError("hypothesis violated: deg q must be prime to p")
    if inst.eta_y == 0:
        raise InputError("hypothesis violated: eta_y must be nonzero")
    eta_ypp = (inst.deg_q * inst.eta_y) % inst.p
    constrained = eta_ypp != 0
    return RostAudit(
        eta_ypp=eta_ypp,
        deg_r_constraint="prime to p" if constrained else "unconstrained",
        contradiction_with_brauer_injectivity=constrained,
    )


def index_ff(equations: Sequence, q: tuple[int, int], kmax: int,
             budget: int | None = None, impl: str | None = None) -> int:
    """gcd of the degrees k ≤ kmax with a common point over F_{q^k}; 0 if none.

    `equations` is a nonempty list of diagonal forms (anything with
    `coeffs` and `degree`); a return of 0 means no extension in range
    acquired a point, i.e. no upper bound on the index was established.
    """
    if not equations:
        raise InputError("empty equation list")
    if kmax < 1:
        raise InputError("kmax must be >= 1")
    p, f = q
    running = 0
    for k in range(1, kmax + 1):
        field = get_field(p, f * k)
        rows = [[field.from_rat(c) for c in eq.coeffs] for eq in equations]
        degrees = [eq.degree for eq in equations]
        if projective_common_zero(field, rows, degrees, budget=budget, impl=impl) is not None:
            running = gcd(running, k)
            if running == 1:
                break  # no further degree can change the gcd
    return running


def first_point_over(equations: Sequence, q: tuple[int, int],
                     budget: int | None = None,
                     impl: str | None = None) -> Optional[FFVector]:
    """Witness form of the k = 1 search in `index_ff`, for reporting."""
    if not equations:
        raise InputError("empty equation list")
    p, f = q
    field = get_field(p, f)
    rows = [[field.from_rat(c) for c in eq.coeffs] for eq in equations]
    point = projective_common_zero(field, rows, [eq.degree for eq in equations],
                                   budget=budget, impl=impl)
    return None if point is None else FFVector(p, f, point)
