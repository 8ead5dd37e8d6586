"""Multiplicity tables and exact generating functions in t.

For a character chi the multiplicity of the j-th irreducible in S^i(chi)
(resp. the i-th exterior power) is organized two ways: as rows of a truncated
table, and as the exact rational function whose series lists the column.  The
rational form is assembled from the per-class polynomials lambda_{-t}(chi):
summing size*chi_j(c)/|G| over full conjugacy classes is Galois-stable, so
the numerator and denominator provably have rational coefficients; that fact
is certified at runtime rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import Cyclotomic, NotRationalError, as_cyclotomic
from .groupdata import (
    CharacterTable,
    ClassFunction,
    decompose,
    integral_multiplicities,
)
from .lambdaops import LambdaSequence, char_poly, sym_series_at_class

SYM = "sym"
EXT = "ext"


class NotRationalCoefficientsError(ArithmeticError):
    """A class-summed generating function produced irrational coefficients.

    The class sums are Galois-stable, so this firing signals an internal
    error or corrupted input, never a legitimate outcome.
    """


class CrossCheckError(AssertionError):
    """The table route and the per-class series route disagreed."""


def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


# ---------------------------------------------------------------------------
# generic dense polynomials (used over Fraction and over Cyclotomic)


def poly_add(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(x + y)
    return _trim(out)


def poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return _trim(out)


def poly_scale(a: Sequence, s) -> list:
    return _trim([x * s for x in a])


def poly_divmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    den = _trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    num = list(num)
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    inv_lead = 1 / den[-1] if isinstance(den[-1], Fraction) else den[-1].inverse()
    for i in range(len(num) - 1, len(den) - 2, -1):
        c = num[i] * inv_lead
        if c:
            q[i - (len(den) - 1)] = c
            for j, dj in enumerate(den):
                num[i - (len(den) - 1) + j] = num[i - (len(den) - 1) + j] - c * dj
    return _trim(q), _trim(num)


def poly_gcd(a: Sequence, b: Sequence) -> list:
    """Monic gcd over a field (Fraction coefficients)."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        a = poly_scale(a, 1 / a[-1])
    return a



# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalFunction:
    """num/den over Q in canonical form: gcd(num,den)=1 and den(0)=1."""

    num: tuple[Fraction, ...]
    den: tuple[Fraction, ...]

    @staticmethod
    def make(num: Sequence, den: Sequence = (1,)) -> "RationalFunction":
        num = _trim([Fraction(c) for c in num])
        den = _trim([Fraction(c) for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return RationalFunction((), (Fraction(1),))
        g = poly_gcd(num, den)
        if len(g) > 1:
            num, _ = poly_divmod(num, g)
            den, _ = poly_divmod(den, g)
        if den[0] == 0:
            raise ZeroDivisionError("denominator vanishes at t=0")
        s = 1 / den[0]
        return RationalFunction(tuple(poly_scale(num, s)), tuple(poly_scale(den, s)))

    @staticmethod
    def from_products(
        num_factors: Sequence[Sequence], den_factors: Sequence[Sequence]
    ) -> "RationalFunction":
        num: list = [Fraction(1)]
        for f in num_factors:
            num = poly_mul(num, [Fraction(c) for c in f])
        den: list = [Fraction(1)]
        for f in den_factors:
            den = poly_mul(den, [Fraction(c) for c in f])
        return RationalFunction.make(num, den)

    def is_polynomial(self) -> bool:
        return self.den == (Fraction(1),)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(
            poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den)),
            poly_mul(self.den, other.den),
        )

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(
            poly_mul(self.num, other.num), poly_mul(self.den, other.den)
        )

    def series(self, M: int) -> list[Fraction]:
        return series_of_rational(self, M)

    def factored_denominator(self) -> tuple[list[tuple[int, int]], list[Fraction]]:
        """Best-effort display factorization of den as prod (1-t^a)^e.

        Trial division runs from large a down (small factors divide the large
        composite ones, so ascending order would shred the product); whatever
        does not factor is returned as a leftover polynomial.
        """
        rem = list(self.den)
        factors: list[tuple[int, int]] = []
        a = len(rem) - 1
        while a >= 1 and len(rem) > 1:
            base = [Fraction(1)] + [Fraction(0)] * (a - 1) + [Fraction(-1)]
            if len(base) > len(rem):
                a -= 1
                continue
            q, r = poly_divmod(rem, base)
            if r:
                a -= 1
                continue
            if factors and factors[-1][0] == a:
                factors[-1] = (a, factors[-1][1] + 1)
            else:
                factors.append((a, 1))
            rem = q
        return factors, _trim(rem)

    def __str__(self) -> str:
        num = format_poly(self.num)
        if self.is_polynomial():
            return num
        factors, leftover = self.factored_denominator()
        if factors:
            den = "".join(
                f"(1-t^{a})" + (f"^{e}" if e > 1 else "") for a, e in factors
            ).replace("t^1)", "t)")
            if len(leftover) > 1:
                den += f"({format_poly(leftover)})"
            elif leftover and leftover[0] != 1:
                den = f"{leftover[0]}*{den}"
        else:
            den = f"({format_poly(self.den)})"
        if sum(1 for c in self.num if c) > 1:
            num = f"({num})"
        return f"{num} / {den}"


def format_poly(coeffs: Sequence) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            t = "t" if i == 1 else f"t^{i}"
            if c == 1:
                term = t
            elif c == -1:
                term = f"-{t}"
            else:
                term = f"{c}*{t}"
            parts.append(term)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" + {p}" if not p.startswith("-") else f" - {p[1:]}"
    return out


def series_of_rational(rf: RationalFunction, M: int) -> list[Fraction]:
    """Coefficients 0..M of the power series of num/den (den(0)=1)."""
    if rf.den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out: list[Fraction] = []
    for n in range(M + 1):
        acc = rf.num[n] if n < len(rf.num) else Fraction(0)
        for i in range(1, min(n, len(rf.den) - 1) + 1):
            acc -= rf.den[i] * out[n - i]
        out.append(acc)
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiplicityTable:
    """Rows i = 0..M of certified multiplicities against the irreducibles."""

    op: str
    labels: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)


def _op_check(op: str) -> None:
    if op not in (SYM, EXT):
        raise ValueError(f"op must be {SYM!r} or {EXT!r}")


def multiplicity_table(
    chi: ClassFunction, table: CharacterTable, op: str, M: int
) -> MultiplicityTable:
    """Decompose S^i(chi) (or the i-th exterior power) for i = 0..M."""
    _op_check(op)
    if M < 0:
        raise ValueError("degree must be nonnegative")
    seq = LambdaSequence.compute(chi, M, expect_character=True)
    source = seq.syms if op == SYM else seq.lambdas
    rows = [
        integral_multiplicities(decompose(source[i], table)) for i in range(M + 1)
    ]
    return MultiplicityTable(op=op, labels=table.labels, rows=tuple(rows))


def _per_class_coeffs(chi: ClassFunction, op: str, M: int) -> list[list[Cyclotomic]]:
    cd = chi.data
    out = []
    for c in range(cd.class_count):
        if op == SYM:
            coeffs = sym_series_at_class(chi, c, M)
        else:
            coeffs = char_poly(chi, c)[: M + 1]
            coeffs += [as_cyclotomic(0)] * (M + 1 - len(coeffs))
        out.append(coeffs)
    return out


def genfun_series_table(
    chi: ClassFunction,
    table: CharacterTable,
    op: str,
    M: int,
    cross_check: bool = False,
) -> list[list[Fraction]]:
    """All multiplicity generating series at once: one column per irreducible.

    The per-class series of S_t(chi) (or the per-class lambda_t polynomials)
    are computed once and weighted against each irreducible; with
    ``cross_check`` the whole table is recomputed through the
    decomposition route and compared exactly.
    """
    _op_check(op)
    cd = table.classes
    by_class = _per_class_coeffs(chi, op, M)
    columns: list[list[Fraction]] = []
    for j, chi_j in enumerate(table.irreducibles):
        weights = [
            chi_j.values[c] * cd.sizes[c] for c in range(cd.class_count)
        ]
        col = []
        for n in range(M + 1):
            acc = as_cyclotomic(0)
            for c, w in enumerate(weights):
                if not w.is_zero():
                    acc = acc + w * by_class[cd.inverse_class[c]][n]
            acc = acc / cd.group_order
            try:
                col.append(acc.to_rational())
            except NotRationalError:
                raise NotRationalCoefficientsError(
                    f"coefficient of t^{n} toward {table.labels[j]} is not "
                    f"rational: {acc!r}"
                ) from None
        columns.append(col)
    if cross_check:
        mt = multiplicity_table(chi, table, op, M)
        for j, col in enumerate(columns):
            if list(mt.column(j)) != col:
                raise CrossCheckError(
                    f"series route disagrees with the table column for "
                    f"{table.labels[j]}: {col} vs {mt.column(j)}"
                )
    return columns


def genfun_series(
    chi: ClassFunction,
    table: CharacterTable,
    j: int,
    op: str,
    M: int,
    cross_check: bool = False,
) -> list[Fraction]:
    """Coefficients 0..M of the multiplicity generating function for chi_j.

    Computed from the per-class series route; with ``cross_check`` the
    column is recomputed through the multiplicity table and compared exactly.
    """
    _op_check(op)
    cd = table.classes
    chi_j = table.irreducibles[j]
    by_class = _per_class_coeffs(chi, op, M)
    out = []
    for n in range(M + 1):
        acc = as_cyclotomic(0)
        for c in range(cd.class_count):
            w = chi_j.values[c]
            if not w.is_zero():
                acc = acc + w * cd.sizes[c] * by_class[cd.inverse_class[c]][n]
        acc = acc / cd.group_order
        try:
            out.append(acc.to_rational())
        except NotRationalError:
            raise NotRationalCoefficientsError(
                f"coefficient of t^{n} is not rational: {acc!r}"
            ) from None
    if cross_check:
        col = multiplicity_table(chi, table, op, M).column(j)
        if list(col) != out:
            raise CrossCheckError(
                f"series route {out} disagrees with table column {col}"
            )
    return out


def genfun_rational(
    chi: ClassFunction, table: CharacterTable, j: int, op: str
) -> RationalFunction:
    """The multiplicity generating function for chi_j in closed rational form.

    For the symmetric side, 1/|G| sum over classes of
    size*chi_j(c)/lambda_{-t}(chi)(c^-1) is brought over the product of the
    distinct per-class denominators; both resulting polynomials have rational
    coefficients because the class sum is Galois-stable, and every
    coefficient is certified before the exact gcd reduction over Q.  The
    exterior side is the finite polynomial of exterior multiplicities.
    """
    _op_check(op)
    cd = table.classes
    chi_j = table.irreducibles[j]
    if op == EXT:
        d = int(chi.values[0].to_rational())
        seq = LambdaSequence.compute(chi, d, expect_character=True)
        poly = [decompose(seq.lambdas[i], table)[j] for i in range(d + 1)]
        return RationalFunction.make(poly, [1])
    # group classes by their denominator polynomial lambda_{-t}(chi)(c^-1)
    groups: list[tuple[list[Cyclotomic], Cyclotomic]] = []
    for c in range(cd.class_count):
        lam = char_poly(chi, cd.inverse_class[c])
        dpoly = [v if i % 2 == 0 else -v for i, v in enumerate(lam)]
        weight = chi_j.values[c] * cd.sizes[c]
        for g, (existing, w) in enumerate(groups):
            if len(existing) == len(dpoly) and all(
                a == b for a, b in zip(existing, dpoly)
            ):
                groups[g] = (existing, w + weight)
                break
        else:
            groups.append((dpoly, weight))
    den: list = [as_cyclotomic(1)]
    for dpoly, _ in groups:
        den = poly_mul(den, dpoly)
    num: list = []
    for i, (dpoly, weight) in enumerate(groups):
        if weight.is_zero():
            continue
        partial = [weight]
        for i2, (dpoly2, _) in enumerate(groups):
            if i2 != i:
                partial = poly_mul(partial, dpoly2)
        num = poly_add(num, partial)
    num = poly_scale(num, Fraction(1, cd.group_order))

    def certify(poly: Sequence[Cyclotomic]) -> list[Fraction]:
        out = []
        for n, v in enumerate(poly):
            try:
                out.append(as_cyclotomic(v).to_rational())
            except NotRationalError:
                raise NotRationalCoefficientsError(
                    f"class-summed coefficient of t^{n} is not rational: {v!r}"
                ) from None
        return out

    return RationalFunction.make(certify(num), certify(den))
