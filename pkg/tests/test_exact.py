"""Exact arithmetic: canonical forms, field axioms, characters, rank."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from delpezzo.errors import FactorizationError, InputError
from delpezzo.exact import (
    SignCharacter,
    SqrtCombo,
    character_group,
    matrix_rank,
    rat_from_str,
    rat_str,
    sqrt_of_rational,
    squarefree_decompose,
)


def C(terms):
    return SqrtCombo(terms)


# ---------------------------------------------------------------------------
# squarefree_decompose

@pytest.mark.parametrize("n,expected", [
    (72, (6, 2)),        # 72 = 2^3 * 3^2
    (-27, (3, -3)),      # canonical form behind the coordinate -3*sqrt(-3)
    (1, (1, 1)),
    (-1, (1, -1)),
    (4, (2, 1)),
    (360, (6, 10)),
])
def test_squarefree_decompose(n, expected):
    assert squarefree_decompose(n) == expected


def test_squarefree_decompose_reconstructs():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randint(1, 10**6) * rng.choice([1, -1])
        c, m = squarefree_decompose(n)
        assert c > 0
        assert c * c * m == n
        # square-free: no prime square divides m
        assert squarefree_decompose(m) == (1, m)


def test_squarefree_decompose_errors():
    with pytest.raises(InputError):
        squarefree_decompose(0)
    p = 1_000_003  # prime beyond a tiny bound
    with pytest.raises(FactorizationError):
        squarefree_decompose(p, bound=1000)


# ---------------------------------------------------------------------------
# sqrt_of_rational

@pytest.mark.parametrize("q,terms", [
    (-6, {-6: 1}),
    (20, {5: 2}),
    (4, {1: 2}),
    (Fraction(1, 2), {2: Fraction(1, 2)}),   # sqrt(1/2) = sqrt(2)/2
    (-27, {-3: 3}),
])
def test_sqrt_of_rational(q, terms):
    assert sqrt_of_rational(q) == C(terms)


def test_sqrt_of_rational_squares_back():
    rng = random.Random(123)
    for _ in range(1000):
        num = rng.randint(1, 5000) * rng.choice([1, -1])
        den = rng.randint(1, 5000)
        q = Fraction(num, den)
        r = sqrt_of_rational(q)
        assert r * r == SqrtCombo.from_rat(q)
        # canonical leading sign is positive
        ((_, coeff),) = r.terms.items()
        assert coeff > 0


# ---------------------------------------------------------------------------
# ring operations

def test_add_examples():
    r2 = sqrt_of_rational(2)
    assert r2 + r2 == C({2: 2})
    # orthogonality cancellation for the two explicit points on the model
    # surface: 2*sqrt(-30) - 3*sqrt(-30) + sqrt(-30) = 0
    assert C({-30: 2}) + C({-30: -3}) + C({-30: 1}) == SqrtCombo.zero()
    x = C({-6: 1, 1: Fraction(3, 7)})
    assert x + SqrtCombo.zero() == x


def test_mul_examples():
    assert sqrt_of_rational(2) * sqrt_of_rational(2) == C({1: 2})
    assert C({-6: 1}) * C({5: 2}) == C({-30: 2})
    # sign convention: sqrt(m) = i*sqrt(|m|) for m < 0
    assert C({-6: 1}) * C({-6: 1}) == C({1: -6})
    assert C({-1: 1}) * C({-1: 1}) == C({1: -1})
    assert C({-2: 1}) * C({-3: 1}) == C({6: -1})


def test_non_squarefree_keys_are_canonicalized():
    assert C({8: 1}) == C({2: 2})
    assert C({-12: Fraction(1, 2)}) == C({-3: 1})


def test_inverse_examples():
    assert SqrtCombo.from_rat(3).inverse() == C({1: Fraction(1, 3)})
    assert C({2: 1}).inverse() == C({2: Fraction(1, 2)})
    assert C({1: 1, 2: 1}).inverse() == C({1: -1, 2: 1})
    with pytest.raises(ZeroDivisionError):
        SqrtCombo.zero().inverse()


def test_characters_examples():
    chi2 = SignCharacter.flip(2)
    assert chi2(C({-6: 1})) == C({-6: -1})
    assert SignCharacter.identity()(C({-6: 2, 10: 3})) == C({-6: 2, 10: 3})
    chi5 = SignCharacter.flip(5)
    assert chi5(C({5: 2})) == C({5: -2})
    with pytest.raises(InputError):
        SignCharacter.flip(6)


def test_character_group_structure():
    group = character_group([-1, 2, 3, 5])
    assert len(group) == 16
    ident = SignCharacter.identity()
    assert ident in group
    for chi in group:
        assert chi * chi == ident
        for psi in group:
            assert chi * psi in group


# ---------------------------------------------------------------------------
# property tests: the span of the sqrt(m) really is a field

_gen_primes = [2, 3, 5, 7]


@st.composite
def radicands(draw):
    sign = draw(st.sampled_from([1, -1]))
    m = sign
    for p in _gen_primes:
        if draw(st.booleans()):
            m *= p
    return m


@st.composite
def combos(draw, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        m = draw(radicands())
        num = draw(st.integers(-9, 9))
        den = draw(st.integers(1, 9))
        terms[m] = terms.get(m, 0) + Fraction(num, den)
    return SqrtCombo(terms)


@settings(max_examples=150, deadline=None)
@given(combos(), combos(), combos())
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@settings(max_examples=100, deadline=None)
@given(combos())
def test_inverse_roundtrip(x):
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == SqrtCombo.one()


@settings(max_examples=100, deadline=None)
@given(combos(), combos(),
       st.sets(st.sampled_from([-1] + _gen_primes)),
       st.sets(st.sampled_from([-1] + _gen_primes)))
def test_characters_are_ring_homomorphisms(x, y, f1, f2):
    chi, psi = SignCharacter(frozenset(f1)), SignCharacter(frozenset(f2))
    assert chi(psi(x)) == (chi * psi)(x)
    assert chi(x + y) == chi(x) + chi(y)
    assert chi(x * y) == chi(x) * chi(y)


# ---------------------------------------------------------------------------
# matrix rank

def test_matrix_rank_basics():
    ident = [[int(i == j) for j in range(3)] for i in range(3)]
    assert matrix_rank(ident) == 3
    assert matrix_rank([[0] * 4 for _ in range(3)]) == 0
    assert matrix_rank([[1, 2], [2, 4]]) == 1


def test_matrix_rank_with_radicals():
    r2, r3 = sqrt_of_rational(2), sqrt_of_rational(3)
    # rows (1, sqrt2) and (sqrt2, 2) are proportional; adding sqrt3 breaks it
    assert matrix_rank([[1, r2], [r2, 2]]) == 1
    assert matrix_rank([[1, r2], [r3, r2 * r3]]) == 1
    assert matrix_rank([[1, r2], [r3, 2]]) == 2


def test_matrix_rank_rational_entries_match_fraction_arithmetic():
    rng = random.Random(5)
    for _ in range(20):
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                 for _ in range(4)] for _ in range(3)]
        doubled = rows + [[2 * x for x in row] for row in rows]
        assert matrix_rank(doubled) == matrix_rank(rows)


# ---------------------------------------------------------------------------
# serialization

def test_rat_serialization():
    assert rat_str(Fraction(-3, 7)) == "-3/7"
    assert rat_from_str("-3/7") == Fraction(-3, 7)
    assert rat_from_str("5") == Fraction(5)
    with pytest.raises(InputError):
        rat_from_str("x")


def test_sqrtcombo_serialization_roundtrip():
    x = C({-6: 1, 10: Fraction(-2, 3), 1: 4})
    pairs = x.to_pairs()
    assert pairs == sorted(pairs)
    assert SqrtCombo.from_pairs(pairs) == x
