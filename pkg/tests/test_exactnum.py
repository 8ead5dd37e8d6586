import random
from fractions import Fraction
from math import gcd

import pytest

from symext.exactnum import (
    Cyclotomic,
    NotRationalError,
    binom,
    cyclotomic_polynomial,
    divisors,
    moebius,
    prime_factors,
    primes_below,
    totient,
)


def zeta(n, e=1):
    return Cyclotomic.root_of_unity(n, e)


def test_helpers():
    assert prime_factors(360) == {2: 3, 3: 2, 5: 1}
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert totient(1) == 1 and totient(12) == 4 and totient(30) == 8
    assert moebius(1) == 1 and moebius(6) == 1 and moebius(30) == -1
    assert moebius(4) == 0
    assert primes_below(12) == [2, 3, 5, 7, 11]
    assert binom(6, 2) == 15
    assert binom(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binom(3, 5) == 0


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_from_terms_examples():
    # 1 + z3 + z3^2 vanishes
    assert Cyclotomic.from_terms(3, [(1, 1), (2, 1)]) == -1
    # the order-7 period sums: a + b = -1 and a*b = 2
    a = Cyclotomic.from_terms(7, [(1, 1), (2, 1), (4, 1)])
    b = Cyclotomic.from_terms(7, [(3, 1), (5, 1), (6, 1)])
    assert a + b == -1
    assert a * b == 2
    # degree-0 embedding
    assert Cyclotomic.from_terms(4, [(0, 5)]) == 5
    assert Cyclotomic.from_terms(4, [(0, 5)]).to_rational() == 5


def test_bad_order():
    with pytest.raises(ValueError):
        Cyclotomic.from_terms(0, [(0, 1)])
    with pytest.raises(ValueError):
        Cyclotomic.root_of_unity(-3)


def test_order5_period_sums():
    a = Cyclotomic.from_terms(5, [(1, 1), (4, 1)])
    b = Cyclotomic.from_terms(5, [(2, 1), (3, 1)])
    assert a + b == -1
    assert a * b == -1


def test_inverse():
    assert zeta(4).inverse() == -zeta(4)
    assert zeta(4).inverse() == zeta(4, 3)
    x = 3 + 2 * zeta(5) - zeta(5, 3)
    assert x * x.inverse() == 1
    with pytest.raises(ZeroDivisionError):
        (zeta(3) - zeta(3)).inverse()


def test_conjugation():
    assert zeta(4).conjugate() == -zeta(4)
    a = Cyclotomic.from_terms(7, [(1, 1), (2, 1), (4, 1)])
    b = Cyclotomic.from_terms(7, [(3, 1), (5, 1), (6, 1)])
    assert a.conjugate() == b and b.conjugate() == a
    q = Cyclotomic.from_rational(Fraction(-7, 3))
    assert q.conjugate() == q
    rng = random.Random(11)
    for _ in range(25):
        n = rng.choice([3, 4, 5, 8, 12])
        x = Cyclotomic.from_terms(n, [(rng.randrange(n), rng.randint(-3, 3)) for _ in range(3)])
        y = Cyclotomic.from_terms(n, [(rng.randrange(n), rng.randint(-3, 3)) for _ in range(3)])
        assert x.conjugate().conjugate() == x
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert (x + y).conjugate() == x.conjugate() + y.conjugate()


def test_to_rational():
    assert (1 + zeta(3) + zeta(3, 2)).to_rational() == 0
    with pytest.raises(NotRationalError):
        zeta(5).to_rational()


def test_field_axioms_random():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.choice([3, 4, 5, 6, 7, 8, 9, 12])
        mk = lambda: Cyclotomic.from_terms(
            n, [(rng.randrange(n), Fraction(rng.randint(-4, 4), rng.randint(1, 3))) for _ in range(3)]
        )
        x, y, z = mk(), mk(), mk()
        assert (x * y) * z == x * (y * z)
        assert (x + y) * z == x * z + y * z
        assert x * y == y * x
        if not x.is_zero():
            assert x * x.inverse() == 1


def test_lift_round_trip():
    rng = random.Random(9)
    for _ in range(30):
        n = rng.choice([2, 3, 4, 5, 6])
        k = rng.choice([2, 3, 5])
        x = Cyclotomic.from_terms(n, [(rng.randrange(n), rng.randint(-3, 3)) for _ in range(3)])
        assert x.lift(n * k) == x
        assert x.lift(n * k) + 0 == x
    # mixed-order arithmetic agrees with same-order arithmetic
    assert zeta(2) + zeta(3) == zeta(6, 3) + zeta(6, 2)


def test_primitive_root_sums_are_moebius():
    for n in range(1, 31):
        total = Cyclotomic.from_rational(0)
        for e in range(n):
            if gcd(e, n) == 1:
                total = total + zeta(n, e)
        assert total == moebius(n), n


def test_galois_action():
    x = zeta(5) + 3
    assert x.galois(2) == zeta(5, 2) + 3
    with pytest.raises(ValueError):
        zeta(6).galois(3)


def test_power_and_division():
    assert zeta(5) ** 5 == 1
    assert zeta(5) ** -1 == zeta(5, 4)
    assert (2 * zeta(3)) / 2 == zeta(3)
    assert 1 / zeta(8) == zeta(8, 7)


def test_repr_readable():
    assert repr(Cyclotomic.from_rational(Fraction(3, 2))) == "3/2"
    assert "z4" in repr(zeta(4))
