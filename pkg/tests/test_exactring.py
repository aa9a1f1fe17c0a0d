import random
from fractions import Fraction

import pytest

from conftest import random_laurent
from heckelift.exactring import (
    LaurentQA,
    NonExactDivision,
    NotDivisible,
    ResidualFractionalExponent,
    RingFraction,
    abracket,
    abracket_of_partition,
    bracket_of_partition,
    divide_out_abracket,
    exact_div,
    qbracket,
    qnum,
    qnum_power,
    zsquared,
)


def test_constructors_and_basic_queries():
    zero = LaurentQA.zero()
    assert zero.is_zero() and not zero
    one = LaurentQA.one()
    assert one.coeff(0, 0) == 1
    mono = LaurentQA.monomial(Fraction(3, 2), qexp=-1, aexp=2)
    assert mono.coeff(-1, 2) == Fraction(3, 2)
    assert mono.coeff(0, 0) == 0
    f = qbracket(2) + LaurentQA.monomial(5, qexp=0, aexp=1)
    assert f.a_exponents() == [0, 1]
    assert f.a_slice(1) == {0: 5}
    assert not f.has_fractional_q()
    assert not f.is_a_free()
    assert qbracket(3).is_a_free()


def test_support_ordering_is_a_major_q_minor():
    f = LaurentQA({(2, -1): 1, (-2, -1): 2, (0, 1): 3, (5, 0): 4})
    assert [key for key, _ in f.support()] == [(-2, -1), (2, -1), (5, 0), (0, 1)]


def test_ring_axioms_random():
    rng = random.Random(20240)
    for _ in range(40):
        f = random_laurent(rng)
        g = random_laurent(rng)
        h = random_laurent(rng)
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + LaurentQA.zero() == f
        assert f * LaurentQA.one() == f
        assert f - f == LaurentQA.zero()
        assert -(-f) == f
        assert f * 0 == LaurentQA.zero()
        assert 2 * f == f + f


def test_pow_matches_repeated_multiplication():
    rng = random.Random(7)
    for _ in range(10):
        f = random_laurent(rng, terms=3)
        acc = LaurentQA.one()
        for k in range(5):
            assert f**k == acc
            acc = acc * f
    with pytest.raises(ValueError):
        qbracket(1) ** -1


def test_adams_is_a_ring_homomorphism():
    rng = random.Random(11)
    for _ in range(15):
        f = random_laurent(rng)
        g = random_laurent(rng)
        for d in (2, 3):
            assert (f + g).adams(d) == f.adams(d) + g.adams(d)
            assert (f * g).adams(d) == f.adams(d) * g.adams(d)
        assert f.adams(1) == f
    for n in range(1, 7):
        for d in (2, 3, 5):
            assert qbracket(n).adams(d) == qbracket(n * d)
            assert abracket(n).adams(d) == abracket(n * d)


def test_quantum_integers():
    assert qnum(0).is_zero()
    assert qnum(1) == LaurentQA.one()
    assert qnum(3) == LaurentQA({(2, 0): 1, (0, 0): 1, (-2, 0): 1})
    assert qnum(-3) == -qnum(3)
    for n in range(-8, 9):
        assert qnum(n) * qbracket(1) == qbracket(n)
    for n in range(1, 6):
        for k in range(1, 5):
            assert qnum_power(n, k) * qbracket(k) == qbracket(n * k)
    assert qnum_power(4, 0) == LaurentQA.monomial(4)


def test_partition_brackets():
    assert bracket_of_partition((3, 2), 2) == qbracket(6) * qbracket(4)
    assert bracket_of_partition((), 5) == LaurentQA.one()
    assert abracket_of_partition((2, 1)) == abracket(2) * abracket(1)
    assert zsquared() == qbracket(1) * qbracket(1)


def test_substitute_a_and_derivative():
    f = LaurentQA({(1, 2): 1, (0, -1): -3})
    assert f.substitute_a(1) == LaurentQA({(1, 0): 1, (0, 0): -3})
    assert f.substitute_a(-1) == LaurentQA({(1, 0): 1, (0, 0): 3})
    # d/da (a^2 q - 3 a^-1) at a=1 is 2q + 3
    assert f.a_derivative_at_1() == LaurentQA({(1, 0): 2, (0, 0): 3})
    rng = random.Random(5)
    for _ in range(15):
        g = random_laurent(rng)
        h = random_laurent(rng)
        lhs = (g * h).a_derivative_at_1()
        rhs = g.a_derivative_at_1() * h.substitute_a(1) + g.substitute_a(
            1
        ) * h.a_derivative_at_1()
        assert lhs == rhs


def test_shift_and_eval_numeric():
    f = qbracket(2)
    assert f.shift(qexp=1, aexp=2) == LaurentQA({(3, 2): 1, (-1, 2): -1})
    q0, a0 = 1.3 + 0.2j, 0.7 - 0.4j
    val = (qbracket(2) * abracket(1)).eval_numeric(q0, a0)
    direct = (q0**2 - q0**-2) * (a0 - 1 / a0)
    assert abs(val - direct) < 1e-12


def test_text_round_trip_and_format():
    assert qbracket(2).to_text() == "-1 * q^-2 + 1 * q^2"
    assert LaurentQA.zero().to_text() == "0"
    f = LaurentQA({(Fraction(1, 2), 2): Fraction(-3, 2), (0, 0): 1})
    assert f.to_text() == "1 + -3/2 * q^1/2 * a^2"
    rng = random.Random(99)
    for _ in range(40):
        g = random_laurent(rng, fractional=True)
        assert LaurentQA.from_text(g.to_text()) == g


def test_exact_div_round_trip():
    rng = random.Random(31)
    for _ in range(25):
        f = random_laurent(rng)
        g = random_laurent(rng, aspan=0)
        if g.is_zero():
            continue
        assert exact_div(f * g, g) == f


def test_exact_div_remainder_and_errors():
    err = None
    try:
        exact_div(qbracket(2) + 1, qbracket(2))
    except NonExactDivision as caught:
        err = caught
    assert err is not None
    assert err.remainder == LaurentQA.one()
    with pytest.raises(ValueError):
        exact_div(qbracket(2), abracket(1))
    with pytest.raises(ResidualFractionalExponent):
        exact_div(LaurentQA({(Fraction(1, 2), 0): 1}), qbracket(1))


def test_divide_out_abracket():
    assert divide_out_abracket(abracket(1)) == LaurentQA.one()
    assert divide_out_abracket(abracket(3)) == LaurentQA(
        {(0, 2): 1, (0, 0): 1, (0, -2): 1}
    )
    assert divide_out_abracket(abracket(6), 2) == LaurentQA(
        {(0, 4): 1, (0, 0): 1, (0, -4): 1}
    )
    rng = random.Random(17)
    for _ in range(25):
        f = random_laurent(rng)
        assert divide_out_abracket(abracket(1) * f) == f
    err = None
    try:
        divide_out_abracket(abracket(1) * qbracket(2) + 5)
    except NotDivisible as caught:
        err = caught
    assert err is not None
    assert err.witness == LaurentQA.monomial(5)


def test_ring_fraction_equality_and_arithmetic():
    half = RingFraction(qbracket(2), qbracket(1) * 2)
    same = RingFraction(qbracket(2) * qbracket(3), qbracket(1) * qbracket(3) * 2)
    assert half == same
    with pytest.raises(TypeError):
        hash(half)
    total = half + half
    assert total == RingFraction(qbracket(2), qbracket(1))
    assert total.resolve() == qnum(2)
    assert (half - half).is_zero()
    prod = RingFraction(qbracket(2), qbracket(1)) * RingFraction(
        qbracket(3), qbracket(2)
    )
    assert prod == RingFraction(qbracket(3), qbracket(1))
    assert prod.resolve() == qnum(3)
    assert RingFraction.from_laurent(qnum(2)) == RingFraction(qbracket(2), qbracket(1))
    with pytest.raises(ZeroDivisionError):
        RingFraction(qbracket(1), LaurentQA.zero())
    with pytest.raises(ValueError):
        RingFraction(qbracket(1), abracket(1))


def test_ring_fraction_eval_and_simplified():
    rf = RingFraction(qbracket(4), qbracket(2))
    q0 = 1.1 + 0.3j
    assert abs(rf.eval_numeric(q0, 2.0) - (q0**4 - q0**-4) / (q0**2 - q0**-2)) < 1e-12
    simple = rf.simplified()
    assert simple == rf
