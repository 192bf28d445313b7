"""Exact arithmetic over Q and over multiquadratic extensions Q(√m₁, √m₂, ...).

Elements of the extension are finite sums Σ c_m·√m with rational c_m and
square-free integer radicands m (m = 1 is the rational part).  For m < 0
the symbol √m denotes i·√|m| for one fixed choice of i, so

    √m · √n = g·√s        where m·n = g²·s with s square-free,
                           with an extra factor −1 when m < 0 and n < 0.

Under this convention the span of the √m is a genuine field (isomorphic to
the compositum of Q(i) and the real quadratic fields), representations are
unique, and conjugation by the character flipping −1 is complex conjugation.

Rationals are `fractions.Fraction` throughout; the alias `Rat` is exported
for readability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import FactorizationError, InputError

Rat = Fraction
RatLike = Union[Fraction, int]

#: Trial division gives up beyond this bound rather than risk a wrong answer.
DEFAULT_FACTOR_BOUND = 10**6


def factorize(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> dict[int, int]:
    """Factor |n| by trial division; raise FactorizationError past `bound`."""
    if n == 0:
        raise InputError("cannot factor 0")
    n = abs(n)
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        if d > bound:
            raise FactorizationError(
                f"unfactorable input: {n} has no prime factor <= {bound}")
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if n > bound:
            raise FactorizationError(
                f"unfactorable input: cofactor {n} exceeds bound {bound}")
        factors[n] = factors.get(n, 0) + 1
    return factors


def squarefree_decompose(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> tuple[int, int]:
    """Write n = c²·m with m square-free and sign(m) = sign(n); return (c, m)."""
    if n == 0:
        raise InputError("0 has no square-free decomposition")
    c, m = 1, 1
    for p, e in factorize(n, bound).items():
        c *= p ** (e // 2)
        if e % 2:
            m *= p
    return c, m if n > 0 else -m


def _mul_radicands(m: int, n: int) -> tuple[int, int]:
    """√m·√n = g·√s (sign included in g); both m, n square-free."""
    g, s = squarefree_decompose(m * n)
    if m < 0 and n < 0:
        g = -g
    return g, s


class SqrtCombo:
    """An element Σ c_m·√m of the multiquadratic field, in canonical form.

    The terms map never contains zero coefficients or non-square-free keys,
    so equality of values is equality of maps.  Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, RatLike] | None = None, *,
                 bound: int = DEFAULT_FACTOR_BOUND):
        canonical: dict[int, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                cf, sf = squarefree_decompose(m, bound)
                canonical[sf] = canonical.get(sf, Fraction(0)) + c * cf
        self._terms = {m: c for m, c in canonical.items() if c != 0}
        self._hash = None

    # -- construction helpers -------------------------------------------

    @classmethod
    def from_rat(cls, q: RatLike) -> "SqrtCombo":
        return cls({1: Fraction(q)})

    @classmethod
    def zero(cls) -> "SqrtCombo":
        return cls()

    @classmethod
    def one(cls) -> "SqrtCombo":
        return cls({1: 1})

    # -- inspection ------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or set(self._terms) == {1}

    def as_rat(self) -> Fraction:
        if not self.is_rational():
            raise InputError(f"{self} is irrational")
        return self._terms.get(1, Fraction(0))

    def radicands(self) -> set[int]:
        return set(self._terms)

    def generators(self) -> frozenset[int]:
        """Primes (and −1) supporting the radicands; indexes the conjugates."""
        gens: set[int] = set()
        for m in self._terms:
            if m < 0:
                gens.add(-1)
            for p in factorize(m):
                gens.add(p)
        return frozenset(gens)

    # -- ring structure ---------------------------------------------------

    def __add__(self, other: "SqrtCombo | RatLike") -> "SqrtCombo":
        other = _coerce(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        out = SqrtCombo.__new__(SqrtCombo)
        out._terms = {m: c for m, c in terms.items() if c != 0}
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self) -> "SqrtCombo":
        out = SqrtCombo.__new__(SqrtCombo)
        out._terms = {m: -c for m, c in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other: "SqrtCombo | RatLike") -> "SqrtCombo":
        return self + (-_coerce(other))

    def __rsub__(self, other: "SqrtCombo | RatLike") -> "SqrtCombo":
        return _coerce(other) + (-self)

    def __mul__(self, other: "SqrtCombo | RatLike") -> "SqrtCombo":
        other = _coerce(other)
        terms: dict[int, Fraction] = {}
        for m, cm in self._terms.items():
            for n, cn in other._terms.items():
                g, s = _mul_radicands(m, n)
                terms[s] = terms.get(s, Fraction(0)) + cm * cn * g
        out = SqrtCombo.__new__(SqrtCombo)
        out._terms = {m: c for m, c in terms.items() if c != 0}
        out._hash = None
        return out

    __rmul__ = __mul__

    def inverse(self) -> "SqrtCombo":
        """Multiplicative inverse, via the product of all conjugates.

        The norm Π_χ χ(x) over the full character group on the generators
        of x is a nonzero rational, so x⁻¹ = (Π_{χ≠id} χ(x)) / norm.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return SqrtCombo({1: 1 / self._terms[1]})
        gens = sorted(self.generators())
        partial = SqrtCombo.one()
        for mask in range(1, 2 ** len(gens)):
            chi = SignCharacter(frozenset(
                g for i, g in enumerate(gens) if mask >> i & 1))
            partial = partial * chi(self)
        norm = (self * partial).as_rat()
        assert norm != 0
        return partial * (1 / norm)

    def __truediv__(self, other: "SqrtCombo | RatLike") -> "SqrtCombo":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other: "SqrtCombo | RatLike") -> "SqrtCombo":
        return _coerce(other) * self.inverse()

    # -- comparison & display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SqrtCombo.from_rat(other)
        if not isinstance(other, SqrtCombo):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms):
            c = self._terms[m]
            parts.append(str(c) if m == 1 else f"{c}*sqrt({m})")
        return " + ".join(parts)

    # -- serialization ------------------------------------------------------

    def to_pairs(self) -> list[tuple[int, str]]:
        """Serialize as (m, "p/q") pairs sorted by radicand."""
        return [(m, rat_str(c)) for m, c in sorted(self._terms.items())]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, str]]) -> "SqrtCombo":
        return cls({int(m): rat_from_str(c) for m, c in pairs})


def _coerce(x) -> SqrtCombo:
    if isinstance(x, SqrtCombo):
        return x
    if isinstance(x, (int, Fraction)):
        return SqrtCombo.from_rat(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to SqrtCombo")


def sqrt_of_rational(q: RatLike, bound: int = DEFAULT_FACTOR_BOUND) -> SqrtCombo:
    """The canonical square root c·√m (c > 0) of a nonzero rational q.

    √(a/b) is computed as (1/b)·√(ab), so the radicand stays integral.
    """
    q = Fraction(q)
    if q == 0:
        raise InputError("sqrt of 0 is ambiguous here; use SqrtCombo.zero()")
    c, m = squarefree_decompose(q.numerator * q.denominator, bound)
    return SqrtCombo({m: Fraction(c, q.denominator)})


@dataclass(frozen=True)
class SignCharacter:
    """A {±1}-valued character on square classes, given by flipped generators.

    `flipped` is a set drawn from {−1} ∪ {primes}; the character negates √m
    once for each flipped generator dividing the square class of m (−1
    "divides" m when m < 0).  These are the Galois elements of the
    multiquadratic splitting fields used throughout.
    """

    flipped: frozenset[int]

    def __post_init__(self):
        for g in self.flipped:
            if g != -1 and (g < 2 or any(g % p == 0 for p in range(2, int(math.isqrt(g)) + 1))):
                raise InputError(f"character generator {g} is neither -1 nor prime")

    @classmethod
    def identity(cls) -> "SignCharacter":
        return cls(frozenset())

    @classmethod
    def flip(cls, *gens: int) -> "SignCharacter":
        return cls(frozenset(gens))

    def sign_of(self, m: int) -> int:
        """χ evaluated on the square class of the nonzero integer m."""
        _, m = squarefree_decompose(m)
        s = 1
        if m < 0 and -1 in self.flipped:
            s = -s
        for g in self.flipped:
            if g != -1 and m % g == 0:
                s = -s
        return s

    def __call__(self, x: SqrtCombo) -> SqrtCombo:
        out = SqrtCombo.__new__(SqrtCombo)
        out._terms = {m: (c if self.sign_of(m) == 1 else -c)
                      for m, c in x._terms.items()}
        out._hash = None
        return out

    def __mul__(self, other: "SignCharacter") -> "SignCharacter":
        return SignCharacter(self.flipped ^ other.flipped)

    def is_identity(self) -> bool:
        return not self.flipped


def character_group(generators: Iterable[int]) -> list[SignCharacter]:
    """All 2^k sign characters on the given generators, in a fixed order."""
    gens = sorted(set(generators))
    return [SignCharacter(frozenset(g for i, g in enumerate(gens) if mask >> i & 1))
            for mask in range(2 ** len(gens))]


def matrix_rank(rows: Iterable[Iterable]) -> int:
    """Exact rank of a matrix with SqrtCombo (or rational) entries.

    Gaussian elimination, pivoting on the first nonzero entry in row-major
    order; exactness of the field arithmetic makes the result deterministic.
    """
    mat = [[_coerce(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    if any(len(row) != ncols for row in mat):
        raise InputError("ragged matrix")
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(mat)) if not mat[r][col].is_zero()), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = mat[row][col].inverse()
        mat[row] = [inv * x for x in mat[row]]
        for r in range(len(mat)):
            if r != row and not mat[r][col].is_zero():
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[row])]
        rank += 1
        row += 1
        if row == len(mat):
            break
    return rank


# -- rational serialization ------------------------------------------------

def rat_str(q: RatLike) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def rat_from_str(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational: {s!r}") from exc
