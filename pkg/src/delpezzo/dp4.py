"""Degree-4 del Pezzo surfaces: smooth intersections of two diagonal quadrics
in P^4, their 16 lines, the Galois action on them, and Picard invariants.

For forms Σ a_i·T_i² and Σ b_i·T_i² put d_ij = a_i·b_j − a_j·b_i.  When no
d_ij vanishes the surface is smooth and carries exactly 16 lines, spanned by
point pairs

    ( ε₀·X₀, ε₁·X₁, ε₂·X₂, 1, 0 )
    ( δ·ε₀·Y₀, δ·ε₁·Y₁, δ·ε₂·Y₂, 0, 1 )          (ε₀, ε₁, ε₂, δ) ∈ {±1}⁴

where X₀ = √(d₁₃d₂₃d₀₄/(d₀₁d₂₀d₃₄)) and so on.  The radicals here are not
independent: isotropy only needs the squares, but orthogonality of the two
points needs the products X_i·Y_i to cancel, which pins the relative signs
of the six roots.  We therefore evaluate each X_i, Y_i as a product of one
fixed square root per symbol d_ij inside the radical field, where the
cancellations

    a₀·d₁₂ + a₁·d₂₀ + a₂·d₀₁ = 0 = b₀·d₁₂ + b₁·d₂₀ + b₂·d₀₁

make both pairings vanish identically.  The published sign tuple is then
normalized so that the first point of the (+,+,+,+) line has canonical
(positive leading coefficient) coordinates; the compensating signs move
into the second point.  Any global relabeling of the 16 lines is invisible
to every derived quantity (incidence, orbits, ranks).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import InputError, VerificationError
from .exact import (
    DEFAULT_FACTOR_BOUND,
    SignCharacter,
    SqrtCombo,
    character_group,
    factorize,
    matrix_rank,
    sqrt_of_rational,
    squarefree_decompose,
)
from .quadform import DiagQF


@dataclass(frozen=True)
class QuadricPencil:
    """Two diagonal quinary quadratic forms; the first has nonzero entries."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __init__(self, a, b):
        a = tuple(Fraction(x) for x in a)
        b = tuple(Fraction(x) for x in b)
        if len(a) != 5 or len(b) != 5:
            raise InputError("a quinary pencil needs 5 + 5 coefficients")
        if any(x == 0 for x in a):
            raise InputError("normalization requires a_i != 0 for all i "
                             "(swap the forms or rescale)")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def forms(self) -> tuple[DiagQF, DiagQF]:
        """Both forms as DiagQF; raises when b has a zero entry (a smooth
        pencil allows one), in which case evaluate via the raw tuples."""
        return DiagQF(self.a), DiagQF(self.b)


@dataclass(frozen=True)
class LineP4:
    """A line in P^4 spanned by two points with radical coordinates."""

    p: tuple[SqrtCombo, ...]
    q: tuple[SqrtCombo, ...]

    def stacked(self, other: "LineP4") -> list[list[SqrtCombo]]:
        return [list(self.p), list(self.q), list(other.p), list(other.q)]


def pencil_dij(P: QuadricPencil) -> list[list[Fraction]]:
    """The antisymmetric matrix d_ij = a_i·b_j − a_j·b_i."""
    return [[P.a[i] * P.b[j] - P.a[j] * P.b[i] for j in range(5)]
            for i in range(5)]


def is_smooth(P: QuadricPencil) -> bool:
    """Smoothness of the intersection: no d_ij vanishes."""
    d = pencil_dij(P)
    return all(d[i][j] != 0 for i in range(5) for j in range(i + 1, 5))


def line_radicands(P: QuadricPencil) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """The six rational radicands of the closed line formula, uncanonicalized.

    First triple: coordinates of the (…, 1, 0) point; second triple: the
    (…, 0, 1) point.
    """
    d = pencil_dij(P)
    if not is_smooth(P):
        raise InputError("line formula requires a smooth pencil (all d_ij nonzero)")
    rho = (
        d[1][3] * d[2][3] * d[0][4] / (d[0][1] * d[2][0] * d[3][4]),
        d[2][3] * d[0][3] * d[1][4] / (d[1][2] * d[0][1] * d[3][4]),
        d[0][3] * d[1][3] * d[2][4] / (d[2][0] * d[1][2] * d[3][4]),
    )
    rho_prime = (
        d[1][4] * d[2][4] * d[0][3] / (d[0][1] * d[2][0] * d[4][3]),
        d[2][4] * d[0][4] * d[1][3] / (d[1][2] * d[0][1] * d[4][3]),
        d[0][4] * d[1][4] * d[2][3] / (d[2][0] * d[1][2] * d[4][3]),
    )
    return rho, rho_prime


#: the 16 sign tuples (ε₀, ε₁, ε₂, δ), all-plus first
SIGN_TUPLES: tuple[tuple[int, int, int, int], ...] = tuple(
    itertools.product((1, -1), repeat=4))


def _eval_diag(coeffs, v) -> SqrtCombo:
    # like quadform.evaluate but tolerates zero coefficients, which one slot
    # of the second form of a smooth pencil may carry
    acc = SqrtCombo.zero()
    for c, x in zip(coeffs, v):
        if c:
            acc = acc + c * (x * x)
    return acc


def _pair_diag(coeffs, u, v) -> SqrtCombo:
    acc = SqrtCombo.zero()
    for c, x, y in zip(coeffs, u, v):
        if c:
            acc = acc + c * (x * y)
    return acc


class LineSystem:
    """The 16 lines of a smooth diagonal pencil with their incidence data.

    Attributes:
        pencil:      the defining QuadricPencil
        lines:       tuple of 16 LineP4, indexed like SIGN_TUPLES
        gram:        16x16 intersection matrix (diagonal −1, off-diagonal 0/1)
        radicands:   square-free radicands appearing in the 32 points
        generators:  reduced basis of the square-class group they generate
    """

    def __init__(self, pencil: QuadricPencil, lines: Sequence[LineP4],
                 gram: Sequence[Sequence[int]], radicands: frozenset[int],
                 generators: tuple[int, ...]):
        self.pencil = pencil
        self.lines = tuple(lines)
        self.gram = tuple(tuple(row) for row in gram)
        self.radicands = radicands
        self.generators = generators

    def index_of_signs(self, signs: tuple[int, int, int, int]) -> int:
        return SIGN_TUPLES.index(signs)

    def to_points(self) -> list[list[list[tuple[int, str]]]]:
        """Serializable form: 16 entries of two 5-coordinate points."""
        return [[[c.to_pairs() for c in line.p], [c.to_pairs() for c in line.q]]
                for line in self.lines]


def sixteen_lines(P: QuadricPencil, bound: int = DEFAULT_FACTOR_BOUND) -> LineSystem:
    """Construct and fully verify the 16 lines of a smooth diagonal pencil.

    Every line is checked to lie on the surface by exact evaluation (both
    points isotropic for both forms, both pairings zero), the 16 spans are
    checked pairwise distinct, and the incidence matrix is checked to have
    the shape forced by the geometry (each line meets exactly 5 others,
    rank 6).  Failures raise VerificationError since they are impossible
    for correct inputs.
    """
    if not is_smooth(P):
        raise InputError("pencil is not smooth: some d_ij vanishes")
    d = pencil_dij(P)
    rho, rho_prime = line_radicands(P)

    def root(i: int, j: int) -> SqrtCombo:
        return sqrt_of_rational(d[i][j], bound)

    s01, s12, s20 = root(0, 1), root(1, 2), root(2, 0)
    s03, s13, s23 = root(0, 3), root(1, 3), root(2, 3)
    s04, s14, s24 = root(0, 4), root(1, 4), root(2, 4)
    s34, s43 = root(3, 4), root(4, 3)

    X = (
        s13 * s23 * s04 / (s01 * s20 * s34),
        s23 * s03 * s14 / (s12 * s01 * s34),
        s03 * s13 * s24 / (s20 * s12 * s34),
    )
    Y = (
        s14 * s24 * s03 / (s01 * s20 * s43),
        s24 * s04 * s13 / (s12 * s01 * s43),
        s04 * s14 * s23 / (s20 * s12 * s43),
    )

    # normalize the first point to canonical roots; keep products X_i·Y_i
    x = tuple(sqrt_of_rational(r, bound) for r in rho)
    y = []
    for Xi, Yi, xi, ri in zip(X, Y, x, rho):
        if Xi * Xi != SqrtCombo.from_rat(ri):
            raise VerificationError("coherent root does not square to its radicand")
        if Xi == xi:
            y.append(Yi)
        elif Xi == -xi:
            y.append(-Yi)
        else:
            raise VerificationError("coherent root is not ± the canonical root")
    y = tuple(y)

    one, zero = SqrtCombo.one(), SqrtCombo.zero()
    lines = []
    for e0, e1, e2, delta in SIGN_TUPLES:
        pt1 = (e0 * x[0], e1 * x[1], e2 * x[2], one, zero)
        pt2 = (delta * e0 * y[0], delta * e1 * y[1], delta * e2 * y[2], zero, one)
        lines.append(LineP4(pt1, pt2))

    for line in lines:
        for coeffs in (P.a, P.b):
            if not _eval_diag(coeffs, line.p).is_zero() \
                    or not _eval_diag(coeffs, line.q).is_zero():
                raise VerificationError("line point is not isotropic for the pencil")
            if not _pair_diag(coeffs, line.p, line.q).is_zero():
                raise VerificationError("line points are not orthogonal for the pencil")
        if matrix_rank([list(line.p), list(line.q)]) != 2:
            raise VerificationError("spanning points are proportional")

    gram = [[-1 if i == j else 0 for j in range(16)] for i in range(16)]
    for i in range(16):
        for j in range(i + 1, 16):
            if line_equal(lines[i], lines[j]):
                raise VerificationError(f"lines {i} and {j} coincide")
            gram[i][j] = gram[j][i] = line_incidence(lines[i], lines[j])
    for i, row in enumerate(gram):
        if sum(row) != 4:
            raise VerificationError(f"line {i} meets {sum(row) + 1} != 5 others")
    if matrix_rank(gram) != 6:
        raise VerificationError("incidence matrix does not have rank 6")

    radicands = frozenset(
        m for line in lines for c in (*line.p, *line.q)
        for m in c.radicands() if m != 1)
    return LineSystem(P, lines, gram, radicands, square_class_basis(radicands))


def line_equal(L1: LineP4, L2: LineP4) -> bool:
    """Span equality: the stacked 4x5 coordinate matrix has rank 2."""
    return matrix_rank(L1.stacked(L2)) == 2


def line_incidence(L1: LineP4, L2: LineP4) -> int:
    """1 when two distinct lines meet in P^4 (stacked rank ≤ 3), else 0."""
    rank = matrix_rank(L1.stacked(L2))
    if rank == 2:
        raise InputError("incidence is only defined for distinct lines")
    return 1 if rank == 3 else 0


def square_class_basis(radicands: Iterable[int]) -> tuple[int, ...]:
    """Reduced basis of the subgroup of Q^×/Q^×² generated by the radicands.

    Exponent vectors over F_2 in the coordinates (−1, p₁, p₂, ...) are put
    in reduced row echelon form; each pivot row maps back to a square-free
    integer.  For a full group this returns (−1, p₁, ..., p_k) itself.
    """
    classes = sorted({squarefree_decompose(m)[1] for m in radicands} - {1})
    primes = sorted({p for m in classes for p in factorize(abs(m))} - {1})
    cols = [-1] + primes

    def to_vec(m: int) -> int:
        vec = 1 if m < 0 else 0
        for i, p in enumerate(primes):
            if abs(m) % p == 0:
                vec |= 1 << (i + 1)
        return vec

    pivots: dict[int, int] = {}
    for m in classes:
        cur = to_vec(m)
        for c in sorted(pivots):
            if cur >> c & 1:
                cur ^= pivots[c]
        if cur:
            pivots[(cur & -cur).bit_length() - 1] = cur
    for c in sorted(pivots, reverse=True):
        for c2 in pivots:
            if c2 < c and pivots[c2] >> c & 1:
                pivots[c2] ^= pivots[c]

    def to_int(vec: int) -> int:
        m = -1 if vec & 1 else 1
        for i, p in enumerate(primes):
            if vec >> (i + 1) & 1:
                m *= p
        return m

    return tuple(sorted(to_int(v) for v in pivots.values()))


def full_character_group(S: LineSystem) -> list[SignCharacter]:
    """All sign characters on the primes (and −1) supporting the radicands."""
    support: set[int] = set()
    for m in S.radicands:
        if m < 0:
            support.add(-1)
        support.update(factorize(abs(m)))
    return character_group(support)


def _apply_to_line(chi: SignCharacter, line: LineP4) -> LineP4:
    return LineP4(tuple(chi(c) for c in line.p), tuple(chi(c) for c in line.q))


def character_permutation(S: LineSystem, chi: SignCharacter) -> list[int]:
    """The permutation of {0..15} induced by chi; errors if chi does not
    permute the lines (a radicand/character mismatch)."""
    by_points = {(line.p, line.q): i for i, line in enumerate(S.lines)}
    perm = []
    for i, line in enumerate(S.lines):
        image = _apply_to_line(chi, line)
        j = by_points.get((image.p, image.q))
        if j is None:  # fall back to span comparison over all lines
            j = next((k for k, other in enumerate(S.lines)
                      if line_equal(image, other)), None)
        if j is None:
            raise VerificationError(
                f"character {set(chi.flipped)} maps line {i} off the configuration")
        if not line_equal(image, S.lines[j]):
            raise VerificationError("point match without span match; data corrupt")
        perm.append(j)
    if sorted(perm) != list(range(16)):
        raise VerificationError("character action is not a permutation")
    return perm


def _check_group(chars: Sequence[SignCharacter]) -> None:
    if not chars:
        raise InputError("character list must be nonempty")
    charset = set(chars)
    if len(charset) != len(chars):
        raise InputError("duplicate characters in group")
    for chi in chars:
        for psi in chars:
            if chi * psi not in charset:
                raise InputError("character list is not closed under composition")


def galois_orbits(S: LineSystem, chars: Sequence[SignCharacter]) -> tuple[tuple[int, ...], ...]:
    """Orbits of {0..15} under the permutations induced by a character group."""
    _check_group(chars)
    perms = [character_permutation(S, chi) for chi in chars]
    seen = [False] * 16
    orbits = []
    for start in range(16):
        if seen[start]:
            continue
        stack, orbit = [start], set()
        while stack:
            i = stack.pop()
            if i in orbit:
                continue
            orbit.add(i)
            stack.extend(perm[i] for perm in perms)
        for i in orbit:
            seen[i] = True
        orbits.append(tuple(sorted(orbit)))
    return tuple(sorted(orbits))


def invariant_picard_rank(S: LineSystem, chars: Sequence[SignCharacter]) -> int:
    """Rank of the character-invariant subspace of the span of the 16 classes.

    The classes generate the Picard lattice and the pairing is
    nondegenerate on it, so the invariant rank equals the exact rank of
    G·A where G is the Gram matrix and A the average of the induced
    permutation matrices.
    """
    _check_group(chars)
    perms = [character_permutation(S, chi) for chi in chars]
    n = len(perms)
    avg = [[Fraction(0)] * 16 for _ in range(16)]
    for perm in perms:
        for j, i in enumerate(perm):
            avg[i][j] += Fraction(1, n)
    product = [[sum(Fraction(S.gram[i][k]) * avg[k][j] for k in range(16))
                for j in range(16)] for i in range(16)]
    return matrix_rank(product)


def anticanonical_solution(gram: Sequence[Sequence[int]]) -> Optional[list[Fraction]]:
    """A rational h with h·L_i = 1 for all i, or None when none exists."""
    n = len(gram)
    aug = [[Fraction(x) for x in row] + [Fraction(1)] for row in gram]
    row = 0
    pivot_cols = []
    for col in range(n):
        pivot = next((r for r in range(row, n) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [inv * v for v in aug[row]]
        for r in range(n):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[row])]
        pivot_cols.append(col)
        row += 1
    for r in range(row, n):
        if aug[r][n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, col in enumerate(pivot_cols):
        x[col] = aug[r][n]
    return x


def verify_anticanonical(gram: Sequence[Sequence[int]]) -> bool:
    """Check a class h exists with h·L_i = 1 for all lines and h·h = 4.

    The input must look like an intersection matrix of (−1)-lines in the
    first place (symmetric, diagonal −1, off-diagonal 0 or 1); forged data
    failing that is rejected outright.  h·h is well defined despite the
    nonuniqueness of h modulo the kernel, and equals Σ h_i once G·h is the
    all-ones vector.
    """
    n = len(gram)
    for i in range(n):
        if len(gram[i]) != n or gram[i][i] != -1:
            return False
        for j in range(n):
            if gram[i][j] != gram[j][i]:
                return False
            if i != j and gram[i][j] not in (0, 1):
                return False
    h = anticanonical_solution(gram)
    if h is None:
        return False
    for i in range(n):
        if sum(Fraction(gram[i][j]) * h[j] for j in range(n)) != 1:
            return False
    return sum(h) == 4
