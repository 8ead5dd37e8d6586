"""The two-dimensional characters of dihedral and quaternion groups.

Both families carry a lattice of two-dimensional class functions tau'_k
(values 2cos on rotations, 0 elsewhere) with the multiplication rule
tau'_k tau'_l = tau'_(k+l) + tau'_(k-l).  Symmetric powers of tau'_k walk
this lattice: odd powers are sums of odd-multiple taus, even powers pick up
a one-dimensional correction.  The script checks the engine against these
folded expressions for both families and several parameters.
"""

from symext import LambdaSequence, decompose, get_group
from symext.catalog import family_closed_form, tau_prime

for family, n in [("D2n", 7), ("D2n", 8), ("Q4n", 3)]:
    tab = get_group(family, n)
    period = n if family == "D2n" else 2 * n
    print(f"\n{family} with parameter {n}: order {tab.classes.group_order}, "
          f"{tab.classes.class_count} classes")
    tau1 = tau_prime(family, n, 1)
    print("tau'_1 values:", tau1)

    # tau' arithmetic folds back into the family
    prod = tau_prime(family, n, 2) * tau_prime(family, n, 3)
    assert prod == tau_prime(family, n, 5) + tau_prime(family, n, 1)

    seq = LambdaSequence.compute(tau1, 8, expect_character=True)
    print("second exterior power:", family_closed_form(family, n, 1, "ext", 2))
    print("symmetric powers of tau'_1:")
    for d in range(1, 9):
        want = family_closed_form(family, n, 1, "sym", d)
        got = {tab.labels[j]: q for j, q in enumerate(decompose(seq.syms[d], tab)) if q}
        assert want == got
        print(f"  S^{d}:", got)

# for the quaternion groups the even-power correction alternates with k
q12 = get_group("Q4n", 3)
for k in (1, 2):
    tk = q12.character(f"tau{k}")
    seq = LambdaSequence.compute(tk, 2, expect_character=True)
    lbl = [q12.labels[j] for j, q in enumerate(decompose(seq.lambdas[2], q12)) if q]
    print(f"\nQ4n:3, second exterior power of tau{k} is {lbl[0]}")
