"""Diagonal cubics: cube tests, minimality criterion, local insolubility."""

from fractions import Fraction

import pytest

from delpezzo.cubic import (
    DiagCubic,
    LocalSpec,
    cube_in_ff,
    ff_point_exists,
    is_cube_rational,
    prime_to_3_insoluble,
    qp_insoluble,
    segre_criterion,
)
from delpezzo.errors import InputError
from delpezzo.ffield import get_field


def test_types_validate():
    with pytest.raises(InputError):
        DiagCubic([1, 2, 3])
    with pytest.raises(InputError):
        DiagCubic([1, 0, 1, 1])
    with pytest.raises(InputError):
        LocalSpec(6, 5)
    with pytest.raises(InputError):
        LocalSpec(7, 14)


@pytest.mark.parametrize("q,expected", [
    (8, True), (-8, True), (1, True), (Fraction(-1, 21), False),
    (Fraction(27, 64), True), (9, False), (Fraction(2, 3), False),
])
def test_is_cube_rational(q, expected):
    assert is_cube_rational(q) is expected


@pytest.mark.parametrize("coeffs,expected", [
    ((1, 7, 49, -3), True),
    ((1, 1, 1, 1), False),
    ((1, 2, 4, 1), False),     # a0*a3/(a1*a2) = 1/8
])
def test_segre_criterion(coeffs, expected):
    assert segre_criterion(DiagCubic(coeffs)) is expected


def test_segre_invariances():
    base = (1, 7, 49, -3)
    value = segre_criterion(DiagCubic(base))
    for perm in [(3, 1, 0, 2), (1, 0, 3, 2), (2, 3, 0, 1)]:
        assert segre_criterion(DiagCubic([base[i] for i in perm])) is value
    scaled = DiagCubic([c * 27 for c in base])
    assert segre_criterion(scaled) is value


def test_cube_in_ff_examples():
    assert cube_in_ff(3, 7, 1) is False   # cubes in F_7 are {1, 6}
    assert cube_in_ff(6, 7, 1) is True    # 3^3 = 27 = 6
    assert cube_in_ff(2, 5, 1) is True    # cubing is a bijection on F_5
    assert cube_in_ff(1, 7, 4) is True


def test_cube_in_ff_brute_force_cross_check():
    for p, f in [(7, 1), (7, 2), (13, 1), (3, 2), (5, 2)]:
        F = get_field(p, f)
        cubes = {F.pow(x, 3) for x in F.elements()}
        for a in range(1, p):
            assert cube_in_ff(a, p, f) == (a in cubes)


def test_cube_stability_in_prime_to_3_extensions():
    # a non-cube stays a non-cube in F_{p^f} whenever gcd(f, 3) = 1
    for p in (7, 13):
        noncubes = [a for a in range(1, p) if not cube_in_ff(a, p, 1)]
        assert noncubes
        for a in noncubes:
            for f in range(1, 11):
                if f % 3:
                    assert cube_in_ff(a, p, f) is False
                else:
                    assert cube_in_ff(a, p, f) is True


def test_qp_insoluble_frozen_cases():
    v = qp_insoluble(LocalSpec(7, 3))
    assert v.criterion_holds and v.oracle_agrees and v.witness is None
    v6 = qp_insoluble(LocalSpec(7, 6))
    assert not v6.criterion_holds
    assert v6.witness == (1, 0, 0, 62)
    t0, t1, t2, t3 = v6.witness
    assert (t0**3 + 7 * t1**3 + 49 * t2**3 - 6 * t3**3) % 343 == 0
    v5 = qp_insoluble(LocalSpec(5, 2))
    assert not v5.criterion_holds  # 5 is not 1 mod 3


def test_criterion_implies_empty_sweep():
    # for every unit a mod 7, agreement between the residue criterion
    # and the exhaustive mod-343 sweep
    for a in range(1, 7):
        v = qp_insoluble(LocalSpec(7, a))
        if v.criterion_holds:
            assert v.oracle_agrees, a


def test_prime_to_3_insoluble():
    assert prime_to_3_insoluble(LocalSpec(7, 3, fmax=10)) is True
    assert prime_to_3_insoluble(LocalSpec(7, 6, fmax=10)) is False
    assert prime_to_3_insoluble(LocalSpec(7, 1, fmax=4)) is False


def test_ff_point_exists_examples():
    assert ff_point_exists(DiagCubic([1, 1, 1, 1]), (2, 1)).coords == (1, 1, 0, 0)
    w = ff_point_exists(DiagCubic([1, 7, 49, -3]), (13, 1))
    assert w.coords == (4, 2, 1, 0)
    assert (4**3 + 7 * 2**3 + 49 - 3 * 0) % 13 == 0
    assert ff_point_exists(DiagCubic([1, 1, 1, 1]), (2, 2)) is not None


def test_ff_point_requires_unit_coefficients():
    with pytest.raises(InputError):
        ff_point_exists(DiagCubic([1, 7, 49, -3]), (7, 1))


def test_chevalley_warning_over_small_fields():
    # every unit-coefficient diagonal cubic has a point over F_q, small q
    for p, f in [(2, 1), (3, 1), (5, 1)]:
        for a in range(1, p):
            for b in range(1, p):
                for c in range(1, p):
                    for d in range(1, p):
                        assert ff_point_exists(DiagCubic([a, b, c, d]), (p, f)) is not None
