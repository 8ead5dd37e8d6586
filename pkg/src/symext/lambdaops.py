"""Exterior/symmetric power operations on class functions.

The power operations are evaluated pointwise on conjugacy classes:

* psi^n(f)(g) = f(g^n) via the class power maps,
* lambda^n from the psi values through the Newton recurrence
  n*lambda^n = sum_{i<n} (-1)^(n+1+i) lambda^i psi^(n-i),
* S^n from the lambda values through S^n = sum_{j>=1} (-1)^(j+1) lambda^j S^(n-j).

All divisions are by integers inside Q(zeta), hence exact.  Periodic class
functions (psi^n = psi^gcd(n,|G|) for all n) additionally carry the finite
product form lambda_t = prod (1 - (-t)^a_i)^(b_i/a_i) over the divisors of
the group order, recovered here by divisor recursion on the psi values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .exactnum import Cyclotomic, NotRationalError, as_cyclotomic, divisors
from .groupdata import ClassFunction, adams


class InvalidCharacterError(ValueError):
    """A value claimed to be a genuine character violates a degree bound."""


class NotPeriodicError(ValueError):
    """The product form was requested for a non-periodic class function."""


class NonIntegralDegreeError(ValueError):
    """A per-class polynomial needs chi(identity) to be a nonnegative integer."""


def _scalar_lambdas(psi: list[Cyclotomic], M: int) -> list[Cyclotomic]:
    # psi[n] for n = 1..M (psi[0] unused); returns lambda^0..lambda^M
    lam: list[Cyclotomic] = [as_cyclotomic(1)]
    for n in range(1, M + 1):
        acc = as_cyclotomic(0)
        for i in range(n):
            term = lam[i] * psi[n - i]
            acc = acc + term if i % 2 == 0 else acc - term
        sign = 1 if (n + 1) % 2 == 0 else -1
        lam.append(acc * Fraction(sign, n) if sign < 0 else acc / n)
    return lam


def _scalar_syms(lam: Sequence[Cyclotomic], M: int) -> list[Cyclotomic]:
    syms: list[Cyclotomic] = [as_cyclotomic(1)]
    for n in range(1, M + 1):
        acc = as_cyclotomic(0)
        for j in range(1, n + 1):
            if j < len(lam) and not lam[j].is_zero():
                term = lam[j] * syms[n - j]
                acc = acc + term if j % 2 == 1 else acc - term
        syms.append(acc)
    return syms


@dataclass(frozen=True)
class LambdaSequence:
    """chi together with its psi/lambda/S values up to a degree bound."""

    base: ClassFunction
    degree_bound: int
    adams: tuple[ClassFunction, ...]  # psi^1 .. psi^M
    lambdas: tuple[ClassFunction, ...]  # lambda^0 .. lambda^M
    syms: tuple[ClassFunction, ...]  # S^0 .. S^M

    @classmethod
    def compute(
        cls, chi: ClassFunction, M: int, expect_character: bool = False
    ) -> "LambdaSequence":
        """Fill psi, lambda and S values pointwise per class up to degree M.

        With ``expect_character`` the degree bound lambda^n = 0 for
        n > chi(identity) is asserted, which catches corrupted tables; leave
        it off for virtual characters, where the bound does not apply.
        """
        if M < 0:
            raise ValueError("degree bound must be nonnegative")
        cd = chi.data
        k = cd.class_count
        psi_vals = [[None] * (M + 1) for _ in range(k)]
        for n in range(1, M + 1):
            pm = cd.power_map(n)
            for c in range(k):
                psi_vals[c][n] = chi.values[pm[c]]
        lam_cols = []
        sym_cols = []
        for c in range(k):
            lam = _scalar_lambdas(psi_vals[c], M)
            lam_cols.append(lam)
            sym_cols.append(_scalar_syms(lam, M))
        if expect_character:
            try:
                d = chi.values[0].to_rational()
            except NotRationalError:
                d = None
            if d is not None and d.denominator == 1 and d >= 0:
                for n in range(int(d) + 1, M + 1):
                    for c in range(k):
                        if not lam_cols[c][n].is_zero():
                            raise InvalidCharacterError(
                                f"lambda^{n} is nonzero beyond the degree {d}"
                            )
        mk = lambda cols, n: ClassFunction(cd, [cols[c][n] for c in range(k)])
        return cls(
            base=chi,
            degree_bound=M,
            adams=tuple(
                ClassFunction(cd, [psi_vals[c][n] for c in range(k)])
                for n in range(1, M + 1)
            ),
            lambdas=tuple(mk(lam_cols, n) for n in range(M + 1)),
            syms=tuple(mk(sym_cols, n) for n in range(M + 1)),
        )


def exterior_powers(chi: ClassFunction, M: int, expect_character: bool = False):
    """lambda^0(chi) .. lambda^M(chi) as class functions."""
    return list(LambdaSequence.compute(chi, M, expect_character).lambdas)


def symmetric_powers(chi: ClassFunction, M: int, expect_character: bool = False):
    """S^0(chi) .. S^M(chi) as class functions."""
    return list(LambdaSequence.compute(chi, M, expect_character).syms)


def _integral_degree(chi: ClassFunction) -> int:
    try:
        d = chi.values[0].to_rational()
    except NotRationalError:
        raise NonIntegralDegreeError("chi(identity) is not rational") from None
    if d.denominator != 1 or d < 0:
        raise NonIntegralDegreeError(f"chi(identity) = {d} is not a nonnegative integer")
    return int(d)


def char_poly(chi: ClassFunction, c: int) -> list[Cyclotomic]:
    """Coefficients of lambda_t(chi) at class c, a polynomial of degree chi(e)."""
    d = _integral_degree(chi)
    psi = [None] + [chi.values[chi.data.power_map(n)[c]] for n in range(1, d + 1)]
    return _scalar_lambdas(psi, d)


def sym_series_at_class(chi: ClassFunction, c: int, M: int) -> list[Cyclotomic]:
    """Coefficients 0..M of S_t(chi) at class c, i.e. of 1/lambda_{-t}(chi)(c)."""
    lam = char_poly(chi, c)
    # a_i = coefficient of t^i in lambda_{-t} beyond the constant 1
    a = [as_cyclotomic(0)] + [
        lam[i] if i % 2 == 0 else -lam[i] for i in range(1, len(lam))
    ]
    b = [as_cyclotomic(1)]
    for n in range(1, M + 1):
        acc = as_cyclotomic(0)
        for i in range(1, min(n, len(a) - 1) + 1):
            acc = acc + b[n - i] * a[i]
        b.append(-acc)
    return b


def power_sum_from_elementary(e: Sequence, n: int):
    """Q_n evaluated at elementary-symmetric values e[0]=e_1, ..., by Newton."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ee = [as_cyclotomic(0)] + [as_cyclotomic(x) for x in e]
    while len(ee) <= n:
        ee.append(as_cyclotomic(0))
    p: list = [None]
    for m in range(1, n + 1):
        acc = as_cyclotomic(0)
        for i in range(1, m):
            term = ee[i] * p[m - i]
            acc = acc + term if i % 2 == 1 else acc - term
        tail = ee[m] * m
        acc = acc + tail if m % 2 == 1 else acc - tail
        p.append(acc)
    return p[n]


def complete_from_elementary(e: Sequence, n: int):
    """h_n evaluated at elementary-symmetric values, via the inversion recurrence."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ee = [as_cyclotomic(0)] + [as_cyclotomic(x) for x in e]
    while len(ee) <= n:
        ee.append(as_cyclotomic(0))
    b = [as_cyclotomic(1)]
    for m in range(1, n + 1):
        acc = as_cyclotomic(0)
        for i in range(1, m + 1):
            acc = acc + b[m - i] * ee[i]
        b.append(-acc)
    return b[n] if n % 2 == 0 else -b[n]


def is_periodic(f: ClassFunction) -> bool:
    """Whether psi^n(f) = psi^gcd(n, |G|)(f) for every n up to the group order."""
    cd = f.data
    order = cd.group_order
    for n in range(1, order + 1):
        d = gcd(n, order)
        if d == n:
            continue
        pm_n = cd.power_map(n)
        pm_d = cd.power_map(d)
        for c in range(cd.class_count):
            if pm_n[c] != pm_d[c] and f.values[pm_n[c]] != f.values[pm_d[c]]:
                return False
    return True


@dataclass(frozen=True)
class ProductForm:
    """lambda_t(chi) = prod over divisors a of |G| of (1-(-t)^a)^(b_a(g)/a)."""

    divisors: tuple[int, ...]
    exponents: tuple[ClassFunction, ...]  # b_1, ..., b_r as class functions

    def exponent_at(self, c: int) -> list[tuple[int, Cyclotomic]]:
        """(a_i, b_i(c)) pairs with nonzero b_i at class c."""
        return [
            (a, b.values[c])
            for a, b in zip(self.divisors, self.exponents)
            if not b.values[c].is_zero()
        ]


def product_form(chi: ClassFunction) -> ProductForm:
    """Recover the divisor product form of a periodic class function.

    The exponents are fixed by psi^(a_l)(chi) = sum of b over divisors of a_l,
    solved by recursion along the ascending divisor list.
    """
    if not is_periodic(chi):
        raise NotPeriodicError("class function is not periodic")
    cd = chi.data
    divs = divisors(cd.group_order)
    bs: list[ClassFunction] = []
    for l, a in enumerate(divs):
        b = adams(chi, a)
        for l2 in range(l):
            if a % divs[l2] == 0:
                b = b - bs[l2]
        bs.append(b)
    return ProductForm(tuple(divs), tuple(bs))
