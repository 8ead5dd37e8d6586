"""Shortcut evaluations that bypass the general recurrences.

Covered here: one-dimensional characters (S^i = chi^i), permutation
characters of a quotient action G/N (divisor product forms plus the
coprime-degree multiple-of-Pi rule), one-dimensional central characters
extended by zero, generalized binomial series, and transfer of the whole
computation through a quotient group.  Each form is checked against the
general engine in the test suite; here they are just computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence

from .exactnum import Cyclotomic, as_cyclotomic, binom, divisors
from .genfun import RationalFunction
from .groupdata import CharacterTable, ClassData, ClassFunction, decompose


class InvalidSubgroupError(ValueError):
    """A class-index set fails the normal-subgroup closure conditions."""


class InvalidCentralCharError(ValueError):
    """A root-of-unity assignment is inconsistent with the class structure."""


class NotOneDimensionalError(ValueError):
    """One-dimensional shortcut requested for a higher-dimensional character."""


class NonIntegerExponentError(ValueError):
    """Per-class central form needs O_N(g) to divide the multiplier."""


class MapInconsistentError(ValueError):
    """A quotient class map fails to commute with the class structure."""

    def __init__(self, failures: list[str]):
        super().__init__("; ".join(failures))
        self.failures = failures


# ---------------------------------------------------------------------------
# binomial series


def binomial_series(
    r, a: int = 1, terms: int = 11, base_sign: int = 1, exponent_sign: int = 1
) -> list[Fraction]:
    """Coefficients 0..terms-1 of (1 + base_sign*t^a)^(exponent_sign*r) over Q."""
    if a < 1:
        raise ValueError("a must be a positive integer")
    if base_sign not in (1, -1) or exponent_sign not in (1, -1):
        raise ValueError("signs must be +1 or -1")
    power = Fraction(r) * exponent_sign
    out = [Fraction(0)] * terms
    i = 0
    while i * a < terms:
        out[i * a] = binom(power, i) * (base_sign**i)
        i += 1
    return out


def expand_product_form(pf, c: int, degree: int) -> list[Cyclotomic]:
    """Series expansion to ``degree`` of prod (1-(-t)^a)^(b_a(c)/a).

    The exponents b_a(c)/a may be arbitrary rationals; each factor expands
    through the generalized binomial series.
    """
    result = [as_cyclotomic(1)] + [as_cyclotomic(0)] * degree
    for a, b in pf.exponent_at(c):
        exp = b.to_rational() / a
        # (1 - (-t)^a)^(b/a) = (1 + (-1)^(a+1) t^a)^(b/a)
        factor = binomial_series(exp, a=a, terms=degree + 1, base_sign=-((-1) ** a))
        new = [as_cyclotomic(0)] * (degree + 1)
        for i in range(degree + 1):
            if result[i].is_zero():
                continue
            for k in range(0, degree + 1 - i, a):
                if factor[k]:
                    new[i + k] = new[i + k] + result[i] * factor[k]
        result = new
    return result


# ---------------------------------------------------------------------------
# normal subgroups given as unions of conjugacy classes


@dataclass(frozen=True)
class NormalSubgroupSpec:
    """A normal subgroup named by the set of conjugacy classes it contains."""

    class_indices: frozenset[int]
    quotient_order: int


def subgroup_spec(cd: ClassData, class_indices) -> NormalSubgroupSpec:
    """Validate closure of a class-index set and derive |G/N|."""
    idx = frozenset(class_indices)
    if not idx or 0 not in idx:
        raise InvalidSubgroupError("subgroup must contain the identity class")
    if not idx <= set(range(cd.class_count)):
        raise InvalidSubgroupError("class index out of range")
    for c in idx:
        if cd.inverse_class[c] not in idx:
            raise InvalidSubgroupError(f"not closed under inverse at {cd.names[c]}")
        for p, m in cd.prime_power_maps.items():
            if m[c] not in idx:
                raise InvalidSubgroupError(
                    f"not closed under the {p}-power map at {cd.names[c]}"
                )
    size = sum(cd.sizes[c] for c in idx)
    if cd.group_order % size:
        raise InvalidSubgroupError("class sizes do not sum to a divisor of |G|")
    return NormalSubgroupSpec(idx, cd.group_order // size)


def coset_order(cd: ClassData, spec: NormalSubgroupSpec, c: int) -> int:
    """Order of the image of class c in G/N: least n with class(g^n) inside N."""
    for n in divisors(cd.exponent):
        if cd.power_map(n)[c] in spec.class_indices:
            return n
    raise InvalidSubgroupError("no power of the class lands in the subgroup")


def perm_quotient_character(
    cd: ClassData, spec: NormalSubgroupSpec, m: int = 1
) -> ClassFunction:
    """m copies of the G/N coset-action character: m|G/N| on N, 0 outside."""
    if m < 1:
        raise ValueError("multiplier must be >= 1")
    return ClassFunction(
        cd,
        [
            m * spec.quotient_order if c in spec.class_indices else 0
            for c in range(cd.class_count)
        ],
    )


@dataclass(frozen=True)
class BurnsideForms:
    """Per-class product forms for m copies of the G/N permutation character."""

    cd: ClassData
    spec: NormalSubgroupSpec
    m: int
    coset_orders: tuple[int, ...]

    def character(self) -> ClassFunction:
        return perm_quotient_character(self.cd, self.spec, self.m)

    def lambda_poly(self, c: int) -> list[Fraction]:
        """lambda_t at class c: the polynomial (1-(-t)^h)^(m|G/N|/h), h = O_N."""
        h = self.coset_orders[c]
        e = self.m * self.spec.quotient_order // h
        # (-t)^h = (-1)^h t^h
        return binomial_series(e, a=h, terms=h * e + 1, base_sign=-((-1) ** h))

    def sym_series(self, c: int, M: int) -> list[Fraction]:
        """S_t at class c to degree M: the series of (1-t^h)^(-m|G/N|/h)."""
        h = self.coset_orders[c]
        e = self.m * self.spec.quotient_order // h
        return binomial_series(e, a=h, terms=M + 1, base_sign=-1, exponent_sign=-1)

    def shortcut(self, n: int, op: str) -> ClassFunction:
        """S^n or the n-th exterior power as an exact multiple of Pi.

        Valid whenever gcd(n, |G/N|) = 1: the multiple is
        binom(m|G/N|+n-1, n)/|G/N| for sym and binom(m|G/N|, n)/|G/N| for ext.
        """
        qo = self.spec.quotient_order
        if gcd(n, qo) != 1:
            raise ValueError(f"shortcut needs gcd(n, {qo}) = 1")
        top = self.m * qo
        factor = binom(top + n - 1, n) if op == "sym" else binom(top, n)
        return perm_quotient_character(self.cd, self.spec, 1) * (factor / qo)


def burnside_regular_forms(
    cd: ClassData, spec: NormalSubgroupSpec, m: int = 1
) -> BurnsideForms:
    if m < 1:
        raise ValueError("multiplier must be >= 1")
    orders = tuple(coset_order(cd, spec, c) for c in range(cd.class_count))
    return BurnsideForms(cd, spec, m, orders)


# ---------------------------------------------------------------------------
# one-dimensional characters


@dataclass(frozen=True)
class OneDimForms:
    """Everything about powers of a one-dimensional character chi.

    ``order`` is the multiplicative order q of chi; S^i(chi) = chi^i and the
    generating function toward chi_j is t^i/(1-t^q) for the unique exponent
    i < q with chi^i = chi_j (zero if chi_j is not a power of chi).
    """

    chi: ClassFunction
    table: CharacterTable
    order: int

    def sym_power(self, i: int) -> ClassFunction:
        return self.chi ** (i % self.order)

    def lambda_powers(self) -> list[ClassFunction]:
        return [ClassFunction.constant(self.chi.data, 1), self.chi]

    def genfun(self, j: int) -> RationalFunction:
        target = self.table.irreducibles[j]
        den = [1] + [0] * (self.order - 1) + [-1]
        for i in range(self.order):
            if self.chi**i == target:
                return RationalFunction.make([0] * i + [1], den)
        return RationalFunction.make([0])


def one_dim_forms(chi: ClassFunction, table: CharacterTable) -> OneDimForms:
    if chi.values[0] != 1:
        raise NotOneDimensionalError("chi(identity) must equal 1")
    mults = decompose(chi, table)
    if sorted(mults) != [0] * (len(mults) - 1) + [1]:
        raise NotOneDimensionalError("chi is not an irreducible character")
    trivial = ClassFunction.constant(chi.data, 1)
    q = 1
    power = chi
    while power != trivial:
        power = power * chi
        q += 1
        if q > chi.data.group_order:
            raise NotOneDimensionalError("chi has no finite multiplicative order")
    return OneDimForms(chi, table, q)


# ---------------------------------------------------------------------------
# central one-dimensional characters extended by zero


@dataclass(frozen=True)
class CentralCharSpec:
    """A root-of-unity assignment zeta on the classes of a normal subgroup.

    ``zeta`` maps each class index inside the subgroup to its value; the
    extension by zero m*zeta_0 is the class function the forms below
    describe.
    """

    subgroup: NormalSubgroupSpec
    zeta: Mapping[int, Cyclotomic]
    multiplier: int


def central_char_spec(
    cd: ClassData, spec: NormalSubgroupSpec, zeta: Mapping[int, Cyclotomic], m: int
) -> CentralCharSpec:
    """Validate a zeta assignment: fixes 1 at the identity, respects powers."""
    if m < 1:
        raise ValueError("multiplier must be >= 1")
    zeta = {c: as_cyclotomic(v) for c, v in zeta.items()}
    if set(zeta) != set(spec.class_indices):
        raise InvalidCentralCharError("zeta must assign exactly the subgroup classes")
    if zeta[0] != 1:
        raise InvalidCentralCharError("zeta must be 1 on the identity class")
    for c in spec.class_indices:
        if zeta[cd.inverse_class[c]] != zeta[c].inverse():
            raise InvalidCentralCharError(
                f"zeta at the inverse of {cd.names[c]} is not the reciprocal"
            )
        for p, pm in cd.prime_power_maps.items():
            if zeta[pm[c]] != zeta[c] ** p:
                raise InvalidCentralCharError(
                    f"zeta is not multiplicative along the {p}-power map at {cd.names[c]}"
                )
    return CentralCharSpec(spec, zeta, m)


@dataclass(frozen=True)
class CentralForms:
    """Per-class forms for m*zeta_0 with zeta one-dimensional on central N."""

    cd: ClassData
    spec: CentralCharSpec
    coset_orders: tuple[int, ...]

    def character(self) -> ClassFunction:
        z = self.spec.zeta
        return ClassFunction(
            self.cd,
            [
                z[c] * self.spec.multiplier if c in self.spec.subgroup.class_indices else 0
                for c in range(self.cd.class_count)
            ],
        )

    def zeta0_power(self, n: int) -> ClassFunction:
        z = self.spec.zeta
        return ClassFunction(
            self.cd,
            [
                z[c] ** n if c in self.spec.subgroup.class_indices else 0
                for c in range(self.cd.class_count)
            ],
        )

    def _root_at(self, c: int) -> tuple[int, Cyclotomic]:
        h = self.coset_orders[c]
        m = self.spec.multiplier
        if m % h:
            raise NonIntegerExponentError(
                f"O_N = {h} does not divide the multiplier {m} at {self.cd.names[c]}"
            )
        return h, self.spec.zeta[self.cd.power_map(h)[c]]

    def lambda_poly(self, c: int) -> list[Cyclotomic]:
        """lambda_t at class c: (1 - zeta(g^h)(-t)^h)^(m/h) with h = O_N(g)."""
        h, root = self._root_at(c)
        e = self.spec.multiplier // h
        base = root * (-((-1) ** h))  # coefficient of t^h inside the base
        out = [as_cyclotomic(0)] * (h * e + 1)
        for i in range(e + 1):
            out[i * h] = as_cyclotomic(binom(e, i)) * base**i
        return out

    def sym_series(self, c: int, M: int) -> list[Cyclotomic]:
        """S_t at class c to degree M: the series of (1 - zeta(g^h)t^h)^(-m/h)."""
        h, root = self._root_at(c)
        e = self.spec.multiplier // h
        out = [as_cyclotomic(0)] * (M + 1)
        i = 0
        while i * h <= M:
            out[i * h] = as_cyclotomic(binom(e + i - 1, i)) * root**i
            i += 1
        return out

    def shortcut(self, n: int, op: str) -> ClassFunction:
        """S^n(m zeta_0) = binom(m+n-1, n) zeta_0^n (ext: binom(m, n) zeta_0^n).

        Valid whenever gcd(n, |G/N|) = 1.
        """
        qo = self.spec.subgroup.quotient_order
        if gcd(n, qo) != 1:
            raise ValueError(f"shortcut needs gcd(n, {qo}) = 1")
        m = self.spec.multiplier
        factor = binom(m + n - 1, n) if op == "sym" else binom(m, n)
        return self.zeta0_power(n) * factor


def central_forms(cd: ClassData, spec: CentralCharSpec) -> CentralForms:
    orders = tuple(coset_order(cd, spec.subgroup, c) for c in range(cd.class_count))
    return CentralForms(cd, spec, orders)


# ---------------------------------------------------------------------------
# transfer through a quotient group


@dataclass(frozen=True)
class QuotientTransfer:
    """A surjection of conjugacy classes realizing G ->> Q = G/N.

    ``class_map[c]`` is the Q-class holding the image of the G-class c.
    ``pull`` transports class functions of Q to G; powers, inner products and
    hence all multiplicities transfer along it.
    """

    table_g: CharacterTable
    table_q: CharacterTable
    class_map: tuple[int, ...]

    def pull(self, f: ClassFunction) -> ClassFunction:
        if f.data is not self.table_q.classes and f.data != self.table_q.classes:
            raise MapInconsistentError(["class function is not over the quotient"])
        return ClassFunction(
            self.table_g.classes, [f.values[q] for q in self.class_map]
        )

    def pulled_irreducibles(self) -> list[ClassFunction]:
        return [self.pull(chi) for chi in self.table_q.irreducibles]


def quotient_pullback(
    table_g: CharacterTable, table_q: CharacterTable, class_map: Sequence[int]
) -> QuotientTransfer:
    """Validate the class map and return the transfer context."""
    g, q = table_g.classes, table_q.classes
    class_map = tuple(class_map)
    failures: list[str] = []
    if len(class_map) != g.class_count:
        raise MapInconsistentError(["class map must cover every class of G"])
    if g.group_order % q.group_order:
        failures.append("quotient order does not divide the group order")
    if class_map[0] != 0:
        failures.append("identity class must map to the identity class")
    if set(class_map) != set(range(q.class_count)):
        failures.append("class map is not surjective")
    ratio = g.group_order // q.group_order if q.group_order else 0
    for qi in range(q.class_count):
        fiber = sum(g.sizes[c] for c in range(g.class_count) if class_map[c] == qi)
        if fiber != ratio * q.sizes[qi]:
            failures.append(
                f"fiber over {q.names[qi]} has total size {fiber}, expected {ratio * q.sizes[qi]}"
            )
    for c in range(g.class_count):
        if class_map[g.inverse_class[c]] != q.inverse_class[class_map[c]]:
            failures.append(f"inverse map does not commute at {g.names[c]}")
    for n in range(2, g.exponent + 1):
        pm_g = g.power_map(n)
        pm_q = q.power_map(n)
        for c in range(g.class_count):
            if class_map[pm_g[c]] != pm_q[class_map[c]]:
                failures.append(f"{n}-power map does not commute at {g.names[c]}")
                break
    if failures:
        raise MapInconsistentError(failures)
    return QuotientTransfer(table_g, table_q, class_map)
