"""Finite fields F_{p^f} with a deterministic, reproducible representation.

The modulus is the lexicographically least monic irreducible polynomial of
degree f over F_p (candidates ordered by the integer whose little-endian
base-p digits are the non-leading coefficients).  An element Σ c_i·x^i is
encoded as the integer Σ c_i·p^i, so the prime subfield occupies codes
0..p−1 and enumeration by code is well defined.

For the exhaustive-scan kernels the field exposes dense addition and
multiplication tables (NumPy int32); these are cross-checked against the
direct polynomial arithmetic in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import BudgetError, InputError

#: largest field order for which dense q x q tables are built
TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Division of coefficient lists (little-endian) over F_p; den is monic."""
    num = num[:]
    deg_d = len(den) - 1
    quot = [0] * max(len(num) - deg_d, 0)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i] % p
        if c:
            quot[i - deg_d] = c
            for j, dj in enumerate(den):
                num[i - deg_d + j] = (num[i - deg_d + j] - c * dj) % p
    while num and num[-1] % p == 0:
        num.pop()
    return quot, [c % p for c in num]


def _lex_least_irreducible(p: int, f: int) -> list[int]:
    """Little-endian coefficients (length f+1, monic) of the chosen modulus."""
    if f == 1:
        return [0, 1]  # x; arithmetic is then plain mod-p
    divisors = []
    for d in range(1, f // 2 + 1):
        for code in range(p ** d):
            coeffs = _digits(code, p, d) + [1]
            divisors.append(coeffs)
    for code in range(p ** f):
        cand = _digits(code, p, f) + [1]
        if all(_poly_divmod(cand, g, p)[1] for g in divisors):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {f} over F_{p}")


def _digits(n: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(n % p)
        n //= p
    return out


class FField:
    """Arithmetic in F_{p^f}; obtain shared instances via `get_field`."""

    def __init__(self, p: int, f: int = 1):
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        if f < 1:
            raise InputError("extension degree must be >= 1")
        self.p = p
        self.f = f
        self.q = p ** f
        self.modulus = _lex_least_irreducible(p, f)
        self._tables = None
        self._exp = None
        self._log = None

    def __repr__(self):
        return f"FField({self.p}, {self.f})"

    # -- element codecs ----------------------------------------------------

    def digits(self, a: int) -> list[int]:
        return _digits(a, self.p, self.f)

    def from_digits(self, coeffs: list[int]) -> int:
        if len(coeffs) > self.f:
            raise InputError("too many coefficients")
        a = 0
        for c in reversed(coeffs):
            a = a * self.p + (c % self.p)
        return a

    def from_int(self, c: int) -> int:
        return c % self.p

    def from_rat(self, c: Fraction | int) -> int:
        """Reduce a rational p-unit (or integer unit) into the prime subfield."""
        c = Fraction(c)
        if c.numerator % self.p == 0 or c.denominator % self.p == 0:
            raise InputError(f"{c} is not a {self.p}-adic unit")
        return c.numerator * pow(c.denominator, -1, self.p) % self.p

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a + b) % self.p
        da, db = self.digits(a), self.digits(b)
        return self.from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.f == 1:
            return -a % self.p
        return self.from_digits([-x % self.p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.f == 1:
            return a * b % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.f - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        _, rem = _poly_divmod(prod, self.modulus, self.p)
        rem += [0] * (self.f - len(rem))
        return self.from_digits(rem)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self.pow(a, self.q - 2)

    def elements(self):
        return range(self.q)

    # -- discrete logs and dense tables --------------------------------------

    def _build_logs(self):
        if self._exp is not None:
            return
        order = self.q - 1
        prime_factors = set()
        m, d = order, 2
        while d * d <= m:
            while m % d == 0:
                prime_factors.add(d)
                m //= d
            d += 1
        if m > 1:
            prime_factors.add(m)
        gen = None
        for g in range(1, self.q):
            if all(self.pow(g, order // r) != 1 for r in prime_factors):
                gen = g
                break
        assert gen is not None
        exp = [1]
        for _ in range(order - 1):
            exp.append(self.mul(exp[-1], gen))
        log = [0] * self.q
        for k, v in enumerate(exp):
            log[v] = k
        self._exp = np.array(exp, dtype=np.int64)
        self._log = np.array(log, dtype=np.int64)

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(add, mul) tables of shape (q, q), dtype int32."""
        if self._tables is not None:
            return self._tables
        if self.q > TABLE_LIMIT:
            raise BudgetError(
                f"field of order {self.q} exceeds the table limit {TABLE_LIMIT}")
        if self.f == 1:
            ids = np.arange(self.q, dtype=np.int64)
            add = (ids[:, None] + ids[None, :]) % self.p
        else:
            digs = np.zeros((self.q, self.f), dtype=np.int64)
            rem = np.arange(self.q)
            for i in range(self.f):
                digs[:, i] = rem % self.p
                rem = rem // self.p
            summed = (digs[:, None, :] + digs[None, :, :]) % self.p
            weights = self.p ** np.arange(self.f)
            add = (summed * weights).sum(axis=2)
        self._build_logs()
        order = self.q - 1
        logs = self._log
        mul = self._exp[(logs[:, None] + logs[None, :]) % order].copy()
        mul[0, :] = 0
        mul[:, 0] = 0
        self._tables = (add.astype(np.int32), mul.astype(np.int32))
        return self._tables

    def power_map(self, d: int) -> np.ndarray:
        """Array of x^d over all element codes x (d >= 1)."""
        self._build_logs()
        out = np.zeros(self.q, dtype=np.int32)
        ids = np.arange(1, self.q)
        out[1:] = self._exp[(self._log[ids] * d) % (self.q - 1)]
        return out

    # -- subfield embeddings ---------------------------------------------------

    def embedding(self, big: "FField") -> list[int]:
        """Code map realizing F_{p^f} ⊂ F_{p^F}, via the least root of our modulus.

        Requires the degrees to be compatible (f divides F).
        """
        if big.p != self.p or big.f % self.f != 0:
            raise InputError(f"no embedding of {self} into {big}")
        root = next((x for x in big.elements() if self._eval_in(big, x) == 0), None)
        if root is None:
            raise AssertionError("modulus has no root in the bigger field")
        table = []
        for a in range(self.q):
            acc, rpow = 0, 1
            for c in self.digits(a):
                acc = big.add(acc, big.mul(c % big.p, rpow))
                rpow = big.mul(rpow, root)
            table.append(acc)
        return table

    def _eval_in(self, big: "FField", x: int) -> int:
        acc = 0
        for c in reversed(self.modulus):
            acc = big.add(big.mul(acc, x), c % big.p)
        return acc


@lru_cache(maxsize=None)
def get_field(p: int, f: int = 1) -> FField:
    return FField(p, f)


@dataclass(frozen=True)
class FFVector:
    """A projective point over F_{p^f}, coordinates as element codes."""

    p: int
    f: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if all(c == 0 for c in self.coords):
            raise InputError("projective point must be nonzero")

    def coeff_lists(self) -> list[list[int]]:
        field = get_field(self.p, self.f)
        return [field.digits(c) for c in self.coords]
