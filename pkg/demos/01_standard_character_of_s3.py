"""Walk through the two-dimensional character of S3, start to finish.

The script mirrors the classic first computation in this subject: take the
standard two-dimensional character chi3 of the symmetric group S3, find the
character of its second exterior power by hand via the Newton recurrence,
then let the engine produce the full multiplicity tables and the exact
rational generating functions behind them.
"""

from symext import (
    adams,
    decompose,
    exterior_powers,
    genfun_rational,
    genfun_series,
    get_group,
    multiplicity_table,
)

s3 = get_group("S3")
chi3 = s3.character("chi3")
print("S3 character table rows:", [list(map(repr, chi.values)) for chi in s3.irreducibles])

# psi^2 moves each class to the class of its squares: transpositions square
# to the identity, 3-cycles stay 3-cycles
print("\npsi^2(chi3) =", adams(chi3, 2))
lam = exterior_powers(chi3, 2)
print("lambda^2(chi3) =", lam[2], "=> multiplicities", decompose(lam[2], s3))
assert lam[2] == s3.character("chi2")

# symmetric powers, organized as a table of multiplicities against chi1..chi3
mt = multiplicity_table(chi3, s3, "sym", 10)
print("\nsymmetric-power multiplicities, degrees 0..10")
print("degree  " + "  ".join(s3.labels))
for i, row in enumerate(mt.rows):
    print(f"{i:>6}  " + "  ".join(f"{m:>4}" for m in row))

# each column is the series of an exact rational function
print("\ngenerating functions of the columns:")
for j, lbl in enumerate(s3.labels):
    rf = genfun_rational(chi3, s3, j, "sym")
    series = genfun_series(chi3, s3, j, "sym", 10, cross_check=True)
    print(f"  <{lbl}, S_t(chi3)> = {rf}")
    assert rf.series(10) == series

# reading a single power off the generating functions: degree six
row6 = mt.rows[6]
print("\nS^6(chi3) decomposes as", dict(zip(s3.labels, row6)))
assert row6 == (2, 1, 2)
