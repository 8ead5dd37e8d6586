"""Conjugacy-class data, character tables and class functions.

A finite group enters the engine only through its class-level skeleton: class
sizes, representative orders, the inverse-class pairing and the power maps
class(g) -> class(g^p).  Character values are exact cyclotomic numbers, so the
inner product and every decomposition below is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .exactnum import (
    Cyclotomic,
    NotRationalError,
    Scalar,
    as_cyclotomic,
    prime_factors,
    primes_below,
)


class TableMismatchError(ValueError):
    """Class functions over different class data were combined."""


class NonRationalMultiplicityError(ValueError):
    """A decomposition produced a non-rational inner product."""


class NonIntegralMultiplicityError(ValueError):
    """A certified-integral decomposition came out fractional or negative."""


class ClassData:
    """The conjugacy-class skeleton of a finite group.

    ``prime_power_maps`` holds, for each stored prime p, the map sending the
    class of g to the class of g^p.  Maps for every prime below the exponent
    are kept so that the power map for an arbitrary n can be assembled by
    factoring n mod exponent; constructors in this package always provide
    them (spec files may omit unit primes, which are then derived from the
    character table by Galois matching, see cli module).
    """

    __slots__ = (
        "group_order",
        "exponent",
        "names",
        "sizes",
        "rep_orders",
        "inverse_class",
        "prime_power_maps",
        "_power_cache",
    )

    def __init__(
        self,
        group_order: int,
        exponent: int,
        names: Sequence[str],
        sizes: Sequence[int],
        rep_orders: Sequence[int],
        inverse_class: Sequence[int],
        prime_power_maps: Mapping[int, Sequence[int]],
    ):
        self.group_order = group_order
        self.exponent = exponent
        self.names = tuple(names)
        self.sizes = tuple(sizes)
        self.rep_orders = tuple(rep_orders)
        self.inverse_class = tuple(inverse_class)
        self.prime_power_maps = {p: tuple(m) for p, m in prime_power_maps.items()}
        self._power_cache: dict[int, tuple[int, ...]] = {}

    @property
    def class_count(self) -> int:
        return len(self.names)

    def power_map(self, n: int) -> tuple[int, ...]:
        """The map class(g) -> class(g^n); n is reduced modulo the exponent."""
        if n < 0:
            raise ValueError("power must be nonnegative")
        n %= self.exponent
        cached = self._power_cache.get(n)
        if cached is not None:
            return cached
        k = self.class_count
        if n == 0:
            out = (0,) * k
        elif n == 1:
            out = tuple(range(k))
        else:
            current = list(range(k))
            for p, e in prime_factors(n).items():
                step = self.prime_power_maps.get(p)
                if step is None:
                    raise KeyError(f"no stored power map for prime {p}")
                for _ in range(e):
                    current = [step[c] for c in current]
            out = tuple(current)
        self._power_cache[n] = out
        return out

    def structural_problems(self) -> list[str]:
        """Violations of the class-data invariants (empty list means valid)."""
        probs: list[str] = []
        k = self.class_count
        if sum(self.sizes) != self.group_order:
            probs.append("class sizes do not sum to the group order")
        if self.sizes[0] != 1 or self.rep_orders[0] != 1:
            probs.append("class 0 is not a size-1 identity class of order 1")
        inv = self.inverse_class
        if sorted(inv) != list(range(k)):
            probs.append("inverse_class is not a permutation")
        else:
            for c in range(k):
                if inv[inv[c]] != c:
                    probs.append(f"inverse_class is not an involution at {self.names[c]}")
                if self.sizes[c] != self.sizes[inv[c]]:
                    probs.append(f"inverse class of {self.names[c]} has a different size")
                if self.rep_orders[c] != self.rep_orders[inv[c]]:
                    probs.append(f"inverse class of {self.names[c]} has a different order")
        if self.exponent != lcm(*self.rep_orders):
            probs.append("exponent is not the lcm of element orders")
        if self.group_order % self.exponent:
            probs.append("exponent does not divide the group order")
        for p, m in self.prime_power_maps.items():
            if m[0] != 0:
                probs.append(f"{p}-power map does not fix the identity class")
            for c in range(k):
                r = self.rep_orders[c]
                if self.rep_orders[m[c]] != r // gcd(p, r):
                    probs.append(
                        f"{p}-power map sends {self.names[c]} to a class of wrong order"
                    )
        try:
            for c in range(k):
                if self.power_map(self.rep_orders[c])[c] != 0:
                    probs.append(f"rep_order power of {self.names[c]} misses the identity")
        except KeyError as exc:
            probs.append(str(exc))
        return probs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassData):
            return NotImplemented
        return (
            self.group_order == other.group_order
            and self.exponent == other.exponent
            and self.names == other.names
            and self.sizes == other.sizes
            and self.rep_orders == other.rep_orders
            and self.inverse_class == other.inverse_class
            and self.prime_power_maps == other.prime_power_maps
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ClassData(order={self.group_order}, classes={self.class_count})"


class ClassFunction:
    """A function on conjugacy classes with exact cyclotomic values."""

    __slots__ = ("data", "values")

    def __init__(self, data: ClassData, values: Iterable[Scalar]):
        self.data = data
        self.values = tuple(as_cyclotomic(v) for v in values)
        if len(self.values) != data.class_count:
            raise ValueError("one value per conjugacy class required")

    @staticmethod
    def constant(data: ClassData, value: Scalar) -> "ClassFunction":
        return ClassFunction(data, [value] * data.class_count)

    def __call__(self, c: int) -> Cyclotomic:
        return self.values[c]

    def _check(self, other: "ClassFunction") -> None:
        if self.data is not other.data and self.data != other.data:
            raise TableMismatchError("class functions live over different class data")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.data, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.data, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self) -> "ClassFunction":
        return ClassFunction(self.data, [-a for a in self.values])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(
                self.data, [a * b for a, b in zip(self.values, other.values)]
            )
        return ClassFunction(self.data, [a * other for a in self.values])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ClassFunction":
        return ClassFunction(self.data, [v**n for v in self.values])

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.data == other.data and all(
            a == b for a, b in zip(self.values, other.values)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return "ClassFunction(" + ", ".join(repr(v) for v in self.values) + ")"


class CharacterTable:
    """Class data together with the irreducible characters over it."""

    __slots__ = ("classes", "irreducibles", "labels", "name")

    def __init__(
        self,
        classes: ClassData,
        irreducibles: Sequence[ClassFunction],
        labels: Sequence[str],
        name: str = "",
    ):
        if len(irreducibles) != classes.class_count:
            raise ValueError("need as many irreducibles as conjugacy classes")
        if len(labels) != len(irreducibles):
            raise ValueError("need one label per irreducible")
        self.classes = classes
        self.irreducibles = tuple(irreducibles)
        self.labels = tuple(labels)
        self.name = name

    @property
    def ambient_root_order(self) -> int:
        return self.classes.exponent

    def degrees(self) -> tuple[int, ...]:
        return tuple(int(chi.values[0].to_rational()) for chi in self.irreducibles)

    def character(self, label: str) -> ClassFunction:
        try:
            return self.irreducibles[self.labels.index(label)]
        except ValueError:
            raise KeyError(f"no irreducible labelled {label!r}") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterTable):
            return NotImplemented
        return (
            self.classes == other.classes
            and self.labels == other.labels
            and all(a == b for a, b in zip(self.irreducibles, other.irreducibles))
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        tag = self.name or f"order {self.classes.group_order}"
        return f"CharacterTable({tag}, {self.classes.class_count} classes)"


def regular_character(data: ClassData) -> ClassFunction:
    """|G| at the identity class, 0 elsewhere."""
    vals = [0] * data.class_count
    vals[0] = data.group_order
    return ClassFunction(data, vals)


def adams(f: ClassFunction, n: int) -> ClassFunction:
    """The n-th power operation on class functions: result(g) = f(g^n)."""
    if n < 1:
        raise ValueError("power must be >= 1")
    pm = f.data.power_map(n)
    return ClassFunction(f.data, [f.values[pm[c]] for c in range(f.data.class_count)])


def inner_product(f: ClassFunction, f2: ClassFunction) -> Cyclotomic:
    """(1/|G|) sum over classes of size * f(c) * f2(inverse class of c)."""
    f._check(f2)
    cd = f.data
    total = as_cyclotomic(0)
    for c in range(cd.class_count):
        total = total + f.values[c] * f2.values[cd.inverse_class[c]] * cd.sizes[c]
    return total / cd.group_order


def decompose(f: ClassFunction, table: CharacterTable) -> tuple[Fraction, ...]:
    """Multiplicities of f against the irreducible basis, as exact rationals.

    Raises NonRationalMultiplicityError when some inner product is not
    rational (f is then not a rational virtual character); the reconstruction
    is verified exactly before returning.
    """
    f._check(ClassFunction.constant(table.classes, 0))
    coeffs = []
    for j, chi in enumerate(table.irreducibles):
        v = inner_product(chi, f)
        try:
            coeffs.append(v.to_rational())
        except NotRationalError:
            raise NonRationalMultiplicityError(
                f"inner product with {table.labels[j]} is not rational: {v!r}"
            ) from None
    recon = [as_cyclotomic(0)] * table.classes.class_count
    for q, chi in zip(coeffs, table.irreducibles):
        if q:
            recon = [r + chi.values[c] * q for c, r in enumerate(recon)]
    if any(r != v for r, v in zip(recon, f.values)):
        raise NonRationalMultiplicityError(
            "class function is outside the span of the irreducibles"
        )
    return tuple(coeffs)


def integral_multiplicities(coeffs: Sequence[Fraction]) -> tuple[int, ...]:
    """Certify a multiplicity vector as nonnegative integers."""
    out = []
    for q in coeffs:
        if q.denominator != 1 or q < 0:
            raise NonIntegralMultiplicityError(
                f"multiplicity {q} is not a nonnegative integer"
            )
        out.append(int(q))
    return tuple(out)


def complete_power_maps(
    exponent: int,
    prime_maps: Mapping[int, Sequence[int]],
    value_rows: Sequence[Sequence[Cyclotomic]],
) -> dict[int, tuple[int, ...]]:
    """Fill in class power maps for every prime below the exponent.

    Maps for primes dividing the exponent must already be present (they are
    not determined by character values).  For a prime p coprime to the
    exponent the map is the column permutation induced by the Galois
    substitution zeta -> zeta^p on the table values; the match is unique
    because distinct classes have distinct character columns.
    """
    out = {p: tuple(m) for p, m in prime_maps.items()}
    k = len(value_rows[0]) if value_rows else 0
    for p in primes_below(exponent + 1):
        if p in out:
            continue
        if exponent % p == 0:
            raise KeyError(f"power map for prime {p} (divides exponent) must be given")
        mapped = []
        for c in range(k):
            target = [row[c].galois(p) for row in value_rows]
            hits = [
                c2
                for c2 in range(k)
                if all(row[c2] == t for row, t in zip(value_rows, target))
            ]
            if len(hits) != 1:
                raise ValueError(
                    f"{p}-power image of class {c} is not determined by the table"
                )
            mapped.append(hits[0])
        out[p] = tuple(mapped)
    return out


def validate_table(table: CharacterTable) -> list[str]:
    """Check every table identity; returns the list of violations (empty = pass)."""
    report = table.classes.structural_problems()
    cd = table.classes
    k = cd.class_count
    chis = table.irreducibles
    # degrees and the sum-of-squares identity
    degs = []
    for j, chi in enumerate(chis):
        v = chi.values[0]
        try:
            d = v.to_rational()
        except NotRationalError:
            report.append(f"degree of {table.labels[j]} is not rational")
            continue
        if d.denominator != 1 or d <= 0:
            report.append(f"degree of {table.labels[j]} is not a positive integer")
        else:
            degs.append(int(d))
    if len(degs) == k and sum(d * d for d in degs) != cd.group_order:
        report.append("sum of squared degrees differs from the group order")
    # row orthogonality
    for i in range(k):
        for j in range(i, k):
            v = inner_product(chis[i], chis[j])
            want = 1 if i == j else 0
            if v != want:
                report.append(
                    f"<{table.labels[i]},{table.labels[j]}> = {v!r}, expected {want}"
                )
    # column orthogonality
    for c in range(k):
        for c2 in range(c, k):
            s = as_cyclotomic(0)
            for chi in chis:
                s = s + chi.values[c] * chi.values[c2].conjugate()
            want = Fraction(cd.group_order, cd.sizes[c]) if c == c2 else Fraction(0)
            if s != want:
                report.append(
                    f"column product {cd.names[c]},{cd.names[c2]} = {s!r}, expected {want}"
                )
    # the inverse map must implement complex conjugation on characters
    for j, chi in enumerate(chis):
        for c in range(k):
            if chi.values[cd.inverse_class[c]] != chi.values[c].conjugate():
                report.append(
                    f"{table.labels[j]} at inverse of {cd.names[c]} is not the conjugate"
                )
                break
    return report
