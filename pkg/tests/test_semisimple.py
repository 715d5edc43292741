import json
import math
import random

import pytest

from qdyn import (
    DomainError,
    LaurentMatrix,
    LaurentPoly,
    ParseError,
    entropy_at,
    entropy_curve,
    evaluate,
    gelfand_iterate,
    parse_laurent_matrix,
    poincare_complexity,
    spectral_curve_poly,
)

GOLDEN = math.log((1 + math.sqrt(5)) / 2)


def fib_matrix():
    one = LaurentPoly.constant(1)
    return LaurentMatrix.from_rows([[one, one], [one, LaurentPoly.zero()]])


def shift_matrix(n):
    return LaurentMatrix.from_rows([[LaurentPoly.monomial(-n)]])


def zpz_matrix():
    return LaurentMatrix.from_rows([[LaurentPoly.from_dict({1: 1, -1: 1})]])


def random_matrix(rng, size, strictly_positive=True):
    rows = []
    for _ in range(size):
        row = []
        for _ in range(size):
            coeffs = {}
            for _ in range(rng.randint(1, 3)):
                coeffs[rng.randint(-2, 2)] = rng.randint(1 if strictly_positive else 0, 3)
            row.append(LaurentPoly.from_dict(coeffs))
        rows.append(row)
    return LaurentMatrix.from_rows(rows)


def test_poincare_complexity_examples():
    assert poincare_complexity({0: 1}, 3.7) == 1.0
    assert poincare_complexity({-1: 1, 1: 1}, 0.0) == 2.0
    assert poincare_complexity({2: 3}, math.log(2)) == pytest.approx(0.75, abs=1e-15)
    with pytest.raises(DomainError):
        poincare_complexity({0: -1}, 0.0)


def test_evaluate_examples():
    z = LaurentMatrix.from_rows([[LaurentPoly.monomial(1)]])
    assert evaluate(z, 0.0)[0, 0] == 1.0
    assert evaluate(zpz_matrix(), math.log(2))[0, 0] == pytest.approx(2.5, abs=1e-15)
    a0 = evaluate(fib_matrix(), -3.0)
    a1 = evaluate(fib_matrix(), 5.0)
    assert (a0 == a1).all()


def test_evaluate_overflow_reported():
    z = LaurentMatrix.from_rows([[LaurentPoly.monomial(-1000)]])
    with pytest.raises(DomainError, match="overflow"):
        evaluate(z, 10.0)


def test_entropy_shift_convention():
    # entry z^{-n} is the shift [n]; h_t = n*t
    for n in (1, 2, 3):
        for t in (-1.5, -0.3, 0.0, 0.7, 2.0):
            assert entropy_at(shift_matrix(n), t) == pytest.approx(n * t, abs=1e-12)


def test_entropy_fibonacci_constant():
    for t in (-2.0, -0.5, 0.0, 1.0, 2.0):
        assert entropy_at(fib_matrix(), t) == pytest.approx(GOLDEN, abs=1e-12)


def test_entropy_zpz():
    for t in (-1.0, 0.0, 0.25, 2.0):
        assert entropy_at(zpz_matrix(), t) == pytest.approx(
            math.log(math.exp(t) + math.exp(-t)), abs=1e-12)


def test_entropy_nilpotent_is_minus_infinity():
    p = LaurentMatrix.from_rows([
        [LaurentPoly.zero(), LaurentPoly.constant(1)],
        [LaurentPoly.zero(), LaurentPoly.zero()],
    ])
    assert entropy_at(p, 0.3) == float("-inf")


def test_zero_matrix_rejected():
    with pytest.raises(DomainError, match="nonzero"):
        LaurentMatrix.from_rows([[LaurentPoly.zero()]])


def test_negative_coefficients_rejected():
    with pytest.raises(DomainError):
        LaurentPoly.from_dict({0: -1})


def test_entropy_curve_constant_and_linear():
    curve = entropy_curve(fib_matrix(), -2.0, 2.0, 9)
    assert len(curve.samples) == 9
    assert all(h == pytest.approx(GOLDEN, abs=1e-12) for _, h in curve.samples)
    lin = entropy_curve(LaurentMatrix.from_rows([[LaurentPoly.monomial(1)]]), -1.0, 1.0, 3)
    assert [h for _, h in lin.samples] == pytest.approx([1.0, 0.0, -1.0], abs=1e-12)
    with pytest.raises(DomainError):
        entropy_curve(fib_matrix(), 1.0, -1.0, 5)
    with pytest.raises(DomainError):
        entropy_curve(fib_matrix(), -1.0, 1.0, 1)


def test_spectral_curve_poly_examples():
    fib = spectral_curve_poly(fib_matrix())
    assert dict(fib.coeffs) == {(0, 2): 1, (0, 1): -1, (0, 0): -1}
    assert fib.clearing_exponent == 0
    for n in (0, 1, 3):
        mono = spectral_curve_poly(LaurentMatrix.from_rows([[LaurentPoly.monomial(n)]]))
        assert dict(mono.coeffs) == {(0, 1): 1, (n, 0): -1}
        assert mono.clearing_exponent == 0
    zpz = spectral_curve_poly(zpz_matrix())
    assert dict(zpz.coeffs) == {(1, 1): 1, (2, 0): -1, (0, 0): -1}
    assert zpz.clearing_exponent == 1


def test_spectral_curve_residual_along_entropy_graph():
    for p in (fib_matrix(), shift_matrix(2), zpz_matrix()):
        poly = spectral_curve_poly(p)
        for k in range(20):
            t = -2.0 + 4.0 * k / 19
            h = entropy_at(p, t)
            assert poly.relative_residual(math.exp(-t), math.exp(h)) < 1e-6


def test_gelfand_fibonacci():
    for t in (-1.0, 0.0, 2.0):
        assert gelfand_iterate(fib_matrix(), t, 60) == pytest.approx(
            (1 + math.sqrt(5)) / 2, abs=1e-3)


def test_gelfand_constant_exact():
    c = LaurentMatrix.from_rows([[LaurentPoly.constant(7)]])
    for steps in (1, 2, 5, 40):
        assert gelfand_iterate(c, 0.0, steps) == pytest.approx(7.0, abs=1e-12)


def test_gelfand_permutation():
    perm = LaurentMatrix.from_rows([
        [LaurentPoly.zero(), LaurentPoly.constant(1)],
        [LaurentPoly.constant(1), LaurentPoly.zero()],
    ])
    assert gelfand_iterate(perm, 0.5, 80) == pytest.approx(1.0, abs=1e-9)


def test_gelfand_nilpotent_zero():
    p = LaurentMatrix.from_rows([
        [LaurentPoly.zero(), LaurentPoly.constant(1)],
        [LaurentPoly.zero(), LaurentPoly.zero()],
    ])
    assert gelfand_iterate(p, 0.0, 10) == 0.0


def test_entropy_matches_gelfand_oracle():
    rng = random.Random(20240601)
    for _ in range(10):
        size = rng.randint(1, 4)
        p = random_matrix(rng, size)
        for t in (-0.8, 0.0, 1.1):
            h = entropy_at(p, t)
            g = math.log(gelfand_iterate(p, t, 200))
            assert abs(h - g) < 1e-3


def test_power_rule():
    rng = random.Random(99)
    mats = [fib_matrix(), zpz_matrix()] + [random_matrix(rng, rng.randint(1, 3)) for _ in range(4)]
    for p in mats:
        for t in (-0.5, 0.4):
            assert entropy_at(p.power(3), t) == pytest.approx(3 * entropy_at(p, t), abs=1e-9)


def test_submultiplicative_for_commuting():
    rng = random.Random(4)
    for _ in range(5):
        p = random_matrix(rng, rng.randint(1, 3))
        q = p.power(2)  # commutes with p
        for t in (-0.3, 0.8):
            lhs = entropy_at(p @ q, t)
            assert lhs <= entropy_at(p, t) + entropy_at(q, t) + 1e-9


def test_coefficient_monotonicity():
    rng = random.Random(31)
    for _ in range(8):
        size = rng.randint(1, 3)
        p = random_matrix(rng, size)
        i, j = rng.randrange(size), rng.randrange(size)
        bumped_rows = [list(row) for row in p.entries]
        bump = LaurentPoly.from_dict({rng.randint(-2, 2): rng.randint(1, 2)})
        bumped_rows[i][j] = bumped_rows[i][j] + bump
        bigger = LaurentMatrix.from_rows(bumped_rows)
        for t in (-0.7, 0.0, 1.3):
            assert entropy_at(bigger, t) >= entropy_at(p, t) - 1e-9


def test_matrix_json_roundtrip():
    p = fib_matrix()
    blob = json.dumps(p.to_json_obj())
    assert parse_laurent_matrix(blob) == p


def test_matrix_parse_errors():
    with pytest.raises(ParseError, match="malformed JSON"):
        parse_laurent_matrix("{")
    with pytest.raises(ParseError, match="row-major"):
        parse_laurent_matrix('{"size": 2, "entries": [[]]}')
    with pytest.raises(ParseError, match="negative"):
        parse_laurent_matrix('{"size": 1, "entries": [[{"exp": 0, "coef": -1}]]}')
    with pytest.raises(ParseError, match="exp"):
        parse_laurent_matrix('{"size": 1, "entries": [[{"coef": 1}]]}')


def test_gelfand_steps_validation():
    with pytest.raises(DomainError):
        gelfand_iterate(fib_matrix(), 0.0, 0)
