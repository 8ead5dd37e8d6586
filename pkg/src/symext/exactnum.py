"""Exact arithmetic in the cyclotomic fields Q(zeta_N).

Every character value handled by this package lives in some Q(zeta_N).
Elements are stored on the power basis 1, z, ..., z^(phi(N)-1) where z is a
primitive N-th root of unity, with coordinates reduced modulo the N-th
cyclotomic polynomial Phi_N.  Internally a value is an integer coordinate
vector over a single positive denominator, so the hot operations (add,
multiply) run on machine integers; coordinates surface as
``fractions.Fraction``.  All arithmetic is exact - there is no floating
point anywhere in this module.

Values of different orders interoperate by lifting to the lcm order, so a
plain rational can be kept cheaply at order 1 and combined with roots of
unity of any order.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[int, Fraction]
Scalar = Union[int, Fraction, "Cyclotomic"]


class NotRationalError(ValueError):
    """A cyclotomic value was required to be rational but is not."""


# ---------------------------------------------------------------------------
# small number theory helpers


def prime_factors(n: int) -> dict[int, int]:
    """Factor n >= 1 into {prime: multiplicity} by trial division."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def totient(n: int) -> int:
    phi = n
    for p in prime_factors(n):
        phi -= phi // p
    return phi


def moebius(n: int) -> int:
    mu = 1
    for _, e in prime_factors(n).items():
        if e > 1:
            return 0
        mu = -mu
    return mu


def primes_below(n: int) -> list[int]:
    return [p for p in range(2, n) if all(p % q for q in range(2, int(p**0.5) + 1))]


def binom(r: RationalLike, n: int) -> Fraction:
    """Generalized binomial coefficient r(r-1)...(r-n+1)/n! for rational r."""
    if n < 0:
        return Fraction(0)
    num = Fraction(1)
    for i in range(n):
        num *= Fraction(r) - i
    den = 1
    for i in range(2, n + 1):
        den *= i
    return num / den


# ---------------------------------------------------------------------------
# cyclotomic polynomials and power-basis reduction tables

# reentrant: Phi_N computation recurses into proper divisors under the lock
_cache_lock = threading.RLock()
_phi_cache: dict[int, tuple[int, ...]] = {}
# _power_cache[N][m] = integer coordinates of z^m on the power basis
_power_cache: dict[int, list[tuple[int, ...]]] = {}
_totient_cache: dict[int, int] = {}


def _phi_of(n: int) -> int:
    t = _totient_cache.get(n)
    if t is None:
        t = totient(n)
        _totient_cache[n] = t
    return t


def _poly_div_exact(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; division of integer polynomials stays integral
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending degree; computed once and cached."""
    if n < 1:
        raise ValueError("order must be a positive integer")
    got = _phi_cache.get(n)
    if got is not None:
        return got
    with _cache_lock:
        got = _phi_cache.get(n)
        if got is not None:
            return got
        if n == 1:
            poly = (-1, 1)
        else:
            # (x^n - 1) / prod of Phi_d over proper divisors d of n
            acc = [-1] + [0] * (n - 1) + [1]
            for d in divisors(n)[:-1]:
                acc = _poly_div_exact(acc, cyclotomic_polynomial(d))
            poly = tuple(acc)
        _phi_cache[n] = poly
        return poly


def _power_rows(n: int, upto: int) -> list[tuple[int, ...]]:
    """Rows m -> integer coordinates of z^m mod Phi_n, for all m <= upto."""
    rows = _power_cache.get(n)
    if rows is not None and len(rows) > upto:
        return rows
    with _cache_lock:
        rows = _power_cache.get(n)
        deg = _phi_of(n)
        if rows is None:
            rows = [tuple(1 if j == m else 0 for j in range(deg)) for m in range(deg)]
            _power_cache[n] = rows
        phi = cyclotomic_polynomial(n)
        while len(rows) <= upto:
            prev = rows[-1]
            shifted = [0] + list(prev[: deg - 1])
            top = prev[deg - 1]
            if top:
                # z^deg = -(phi_0 + phi_1 z + ... + phi_{deg-1} z^{deg-1})
                for j in range(deg):
                    shifted[j] -= top * phi[j]
            rows.append(tuple(shifted))
        return rows


# ---------------------------------------------------------------------------


class Cyclotomic:
    """An exact element of Q(zeta_order) on the power basis mod Phi_order.

    Instances are immutable; all operations return new values.  Mixed
    arithmetic with int/Fraction embeds the rational at order 1.
    """

    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, coeffs: Sequence[RationalLike]):
        deg = _phi_of(order)
        if len(coeffs) != deg:
            raise ValueError(f"need {deg} coefficients for order {order}")
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        num = tuple(int(c * den) for c in coeffs)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def _raw(order: int, num: Sequence[int], den: int) -> "Cyclotomic":
        # normalize: positive denominator, gcd(all coordinates, den) = 1
        if den < 0:
            den = -den
            num = [-x for x in num]
        g = den
        for x in num:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            den //= g
            num = [x // g for x in num]
        self = object.__new__(Cyclotomic)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "num", tuple(num))
        object.__setattr__(self, "den", den)
        return self

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("Cyclotomic values are immutable")

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coordinates on the power basis, as exact Fractions."""
        return tuple(Fraction(x, self.den) for x in self.num)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(q: RationalLike) -> "Cyclotomic":
        q = Fraction(q)
        return Cyclotomic._raw(1, (q.numerator,), q.denominator)

    @staticmethod
    def from_terms(order: int, terms: Iterable[tuple[int, RationalLike]]) -> "Cyclotomic":
        """Sum of q * zeta_order^e over (e, q) pairs, in canonical form."""
        if order < 1:
            raise ValueError("order must be a positive integer")
        deg = _phi_of(order)
        pending: list[tuple[int, Fraction]] = []
        den = 1
        maxe = 0
        for e, q in terms:
            q = Fraction(q)
            if q == 0:
                continue
            e %= order
            pending.append((e, q))
            den = den * q.denominator // gcd(den, q.denominator)
            maxe = max(maxe, e)
        acc = [0] * deg
        rows = _power_rows(order, maxe) if maxe >= deg else None
        for e, q in pending:
            n = int(q * den)
            if e < deg:
                acc[e] += n
            else:
                for j, r in enumerate(rows[e]):
                    if r:
                        acc[j] += n * r
        return Cyclotomic._raw(order, acc, den)

    @staticmethod
    def root_of_unity(order: int, exponent: int = 1) -> "Cyclotomic":
        return Cyclotomic.from_terms(order, [(exponent, 1)])

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_rational(self) -> Fraction:
        """The value as a Fraction; NotRationalError if it has irrational part."""
        if not self.is_rational():
            raise NotRationalError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    # -- order management --------------------------------------------------

    def lift(self, new_order: int) -> "Cyclotomic":
        """The same value expressed in Q(zeta_new_order); order must divide it."""
        if new_order == self.order:
            return self
        if new_order % self.order:
            raise ValueError("can only lift to a multiple of the current order")
        k = new_order // self.order
        deg = _phi_of(new_order)
        acc = [0] * deg
        top = (len(self.num) - 1) * k
        rows = _power_rows(new_order, top) if top >= deg else None
        for i, x in enumerate(self.num):
            if not x:
                continue
            e = i * k
            if e < deg:
                acc[e] += x
            else:
                for j, r in enumerate(rows[e]):
                    if r:
                        acc[j] += x * r
        return Cyclotomic._raw(new_order, acc, self.den)

    @staticmethod
    def _common(a: "Cyclotomic", b: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if a.order == b.order:
            return a, b
        n = lcm(a.order, b.order)
        return a.lift(n), b.lift(n)

    @staticmethod
    def _coerce(x: Scalar) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.from_rational(x)
        return NotImplemented  # type: ignore[return-value]

    # -- ring/field operations ----------------------------------------------

    def __add__(self, other: Scalar) -> "Cyclotomic":
        o = Cyclotomic._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = Cyclotomic._common(self, o)
        if a.den == b.den:
            return Cyclotomic._raw(
                a.order, [x + y for x, y in zip(a.num, b.num)], a.den
            )
        den = a.den * b.den // gcd(a.den, b.den)
        sa, sb = den // a.den, den // b.den
        return Cyclotomic._raw(
            a.order, [x * sa + y * sb for x, y in zip(a.num, b.num)], den
        )

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic._raw(self.order, [-x for x in self.num], self.den)

    def __sub__(self, other: Scalar) -> "Cyclotomic":
        o = Cyclotomic._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "Cyclotomic":
        o = Cyclotomic._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        # rational factors just scale coordinates
        if o.is_rational() and self.order >= o.order:
            return Cyclotomic._raw(
                self.order, [x * o.num[0] for x in self.num], self.den * o.den
            )
        if self.is_rational():
            return Cyclotomic._raw(
                o.order, [y * self.num[0] for y in o.num], self.den * o.den
            )
        a, b = Cyclotomic._common(self, o)
        deg = len(a.num)
        conv = [0] * (2 * deg - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:deg])
        if any(conv[deg:]):
            rows = _power_rows(a.order, 2 * deg - 2)
            for m in range(deg, 2 * deg - 1):
                c = conv[m]
                if c:
                    for j, r in enumerate(rows[m]):
                        if r:
                            out[j] += c * r
        return Cyclotomic._raw(a.order, out, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse, by extended Euclid against Phi_order."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero cyclotomic value")
        if self.is_rational():
            num = [self.den] + [0] * (len(self.num) - 1)
            return Cyclotomic._raw(self.order, num, self.num[0])
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        old_r, r = phi, [Fraction(x, self.den) for x in self.num]
        old_s: list[Fraction] = [Fraction(0)]
        s: list[Fraction] = [Fraction(1)]

        def trim(p: list[Fraction]) -> list[Fraction]:
            while p and p[-1] == 0:
                p.pop()
            return p

        r = trim(r)
        while True:
            if not r:
                raise ZeroDivisionError("value shares a factor with Phi_N")
            if len(r) == 1:
                break
            quo = [Fraction(0)] * (len(old_r) - len(r) + 1)
            rem = list(old_r)
            inv_lead = 1 / r[-1]
            for i in range(len(rem) - 1, len(r) - 2, -1):
                c = rem[i] * inv_lead
                if c:
                    quo[i - (len(r) - 1)] = c
                    for j, rj in enumerate(r):
                        rem[i - (len(r) - 1) + j] -= c * rj
            rem = trim(rem)
            new_s = list(old_s) + [Fraction(0)] * max(0, len(quo) + len(s) - 1 - len(old_s))
            for i, qc in enumerate(quo):
                if qc:
                    for j, sc in enumerate(s):
                        if sc:
                            new_s[i + j] -= qc * sc
            old_r, r = r, rem
            old_s, s = s, trim(new_s)
        scale = 1 / r[0]
        deg = _phi_of(self.order)
        out = [Fraction(0)] * deg
        for i, c in enumerate(s):
            out[i] = c * scale
        return Cyclotomic(self.order, out)

    def __truediv__(self, other: Scalar) -> "Cyclotomic":
        o = Cyclotomic._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_rational():
            if o.num[0] == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic._raw(
                self.order, [x * o.den for x in self.num], self.den * o.num[0]
            )
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> "Cyclotomic":
        o = Cyclotomic._coerce(other)
        return o * self.inverse()

    def __pow__(self, n: int) -> "Cyclotomic":
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic.from_rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- Galois action -------------------------------------------------------

    def galois(self, u: int) -> "Cyclotomic":
        """Apply the automorphism zeta -> zeta^u; u must be a unit mod order."""
        if gcd(u, self.order) != 1:
            raise ValueError("exponent must be coprime to the order")
        u %= self.order
        deg = len(self.num)
        acc = [0] * deg
        top = (deg - 1) * u
        rows = _power_rows(self.order, top) if top >= deg else None
        for i, x in enumerate(self.num):
            if not x:
                continue
            e = i * u
            if e < deg:
                acc[e] += x
            else:
                for j, r in enumerate(rows[e]):
                    if r:
                        acc[j] += x * r
        return Cyclotomic._raw(self.order, acc, self.den)

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, i.e. the automorphism zeta -> zeta^(-1)."""
        if self.order == 1 or self.is_rational():
            return self
        return self.galois(self.order - 1)

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = Cyclotomic._common(self, other)
        return a.den == b.den and a.num == b.num

    __hash__ = None  # type: ignore[assignment]  # cross-order equality is not hash-friendly

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                z = f"z{self.order}" if i == 1 else f"z{self.order}^{i}"
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append(f"-{z}")
                else:
                    parts.append(f"{c}*{z}")
        out = parts[0]
        for p in parts[1:]:
            out += f"+{p}" if not p.startswith("-") else p
        return out



def as_cyclotomic(x: Scalar) -> Cyclotomic:
    v = Cyclotomic._coerce(x)
    if v is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a cyclotomic value")
    return v
