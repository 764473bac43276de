"""Exact scalar layer: rational functions of N and canonical square roots."""

import random
from fractions import Fraction

import pytest

from birdtracks.coefficients import (
    N,
    RadicalCoefficient,
    RationalFunction,
    rf,
    sqrt,
)
from birdtracks.errors import (
    DivisionByZero,
    PoleAtN,
    RadicalComparisonUnsupported,
    UnsupportedRadicalDivision,
    ZeroRadicand,
)


def test_canonical_reduction():
    # (N^2 - 1)/(N + 1) reduces to N - 1
    assert rf([-1, 0, 1], [1, 1]) == rf([-1, 1])


def test_denominator_made_monic():
    # (2N)/(2N + 2) -> N/(N + 1)
    assert rf([0, 2], [2, 2]) == rf([0, 1], [1, 1])


def test_zero_is_unique():
    assert rf([0], [3, 5]) == RationalFunction.from_fraction(0)
    assert rf([0]).is_zero()


def test_field_ops_small():
    a = rf([1, 1])        # N + 1
    b = rf([-1, 1])       # N - 1
    assert a * b == rf([-1, 0, 1])
    assert a - a == rf([0])
    assert (a / b) * b == a
    assert a + b == rf([0, 2])
    assert 1 / (a * b) == rf([1], [-1, 0, 1])


def test_field_axioms_random():
    rng = random.Random(7)

    def rand_rf():
        num = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
        den = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
        if not any(den):
            den = [1]
        return rf(num, den)

    for _ in range(50):
        a, b, c = rand_rf(), rand_rf(), rand_rf()
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        if not b.is_zero():
            assert (a / b) * b == a


def test_division_by_zero_raises():
    with pytest.raises(DivisionByZero):
        rf([1]) / rf([0])


def test_eval_at():
    chi2 = rf([3], [0, -1, 0, 1])  # 3/(N^3 - N)
    assert chi2.eval_at(2) == Fraction(1, 2)
    assert rf([-1, 0, 1]).eval_at(5) == 24


def test_eval_at_pole():
    chi3 = rf([6], [0, 2, -3, 1])  # 6/(N(N-1)(N-2))
    with pytest.raises(PoleAtN):
        chi3.eval_at(2)


def test_sqrt_of_constant():
    # sqrt(4/3) = (2/3)*sqrt(3)
    c = sqrt(Fraction(4, 3))
    assert c.terms == {(3,): rf([Fraction(2, 3)])}
    assert sqrt(Fraction(9)) == RadicalCoefficient.from_rational(3)


def test_sqrt_extracts_square_polynomial_part():
    # sqrt(N*(N^2-1)^2) = (N^2 - 1)*sqrt(N)
    poly = rf([0, 1]) * rf([-1, 0, 1]) * rf([-1, 0, 1])
    c = sqrt(poly)
    assert c.terms == {(0, 1): rf([-1, 0, 1])}


def test_sqrt_of_quotient_normalizes_to_polynomial_radicand():
    # sqrt(N/3) = sqrt(3N)/3
    c = sqrt(rf([0, 1], [3]))
    assert c.terms == {(0, 3): rf([Fraction(1, 3)])}


def test_radical_products_recollapse():
    root_n = sqrt(N)
    assert root_n * root_n == RadicalCoefficient.from_rational(N)
    assert sqrt(Fraction(4, 3)) * sqrt(3) == RadicalCoefficient.from_rational(2)
    # sqrt(N^2-1)*sqrt(N+1) = (N+1)*sqrt(N-1)
    prod = sqrt(rf([-1, 0, 1])) * sqrt(rf([1, 1]))
    assert prod.terms == {(-1, 1): rf([1, 1])}


def test_radical_sums_group_by_radicand():
    a = sqrt(N) + sqrt(N)
    assert a.terms == {(0, 1): rf([2])}
    assert (sqrt(N) - sqrt(N)).is_zero()
    mixed = sqrt(N) + RadicalCoefficient.one()
    assert len(mixed.terms) == 2
    assert not mixed.is_rational()


def test_radical_division():
    inv = RadicalCoefficient.one() / sqrt(N)
    # 1/sqrt(N) = sqrt(N)/N
    assert inv.terms == {(0, 1): rf([1], [0, 1])}
    assert inv * sqrt(N) == RadicalCoefficient.one()
    with pytest.raises(UnsupportedRadicalDivision):
        RadicalCoefficient.one() / (sqrt(N) + RadicalCoefficient.one())
    with pytest.raises(DivisionByZero):
        RadicalCoefficient.one() / RadicalCoefficient.zero()


def test_sqrt_of_zero_raises():
    with pytest.raises(ZeroRadicand):
        sqrt(rf([0]))


def test_eval_radical():
    c = sqrt(rf([-1, 0, 1]))  # sqrt(N^2 - 1)
    assert c.eval_at(3) == {2: Fraction(2)}       # sqrt(8) = 2*sqrt(2)
    assert c.eval_at(Fraction(5, 4)) == {1: Fraction(3, 4)}
    with pytest.raises(RadicalComparisonUnsupported):
        c.eval_rational(3)
    assert abs(c.eval_float(3) - 8 ** 0.5) < 1e-12


def test_eval_radical_rational_value():
    c = sqrt(Fraction(4, 3)) * sqrt(3)
    assert c.eval_rational(7) == 2


def test_json_round_trip():
    c = sqrt(rf([-1, 0, 1])) * rf([1], [0, 1]) + RadicalCoefficient.from_rational(rf([5, 2]))
    again = RadicalCoefficient.from_json(c.to_json())
    assert again == c
    r = rf([1, -2, 1], [0, 3])
    assert RationalFunction.from_json(r.to_json()) == r
