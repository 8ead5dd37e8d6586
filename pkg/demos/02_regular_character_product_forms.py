"""Periodic characters and the divisor product form, on the regular character.

A class function is periodic when its power operations only depend on
gcd(n, |G|).  Characters of permutation actions always are, and for them
lambda_t factors as a finite product over the divisors of the group order.
The regular character of S3 makes every step visible: its lambda_t is
(1+t)^6 at the identity, (1-t^2)^3 on transpositions, (1+t^3)^2 on 3-cycles.
"""

from math import gcd

from symext import (
    burnside_regular_forms,
    char_poly,
    decompose,
    expand_product_form,
    get_group,
    is_periodic,
    multiplicity_table,
    product_form,
    regular_character,
    subgroup_spec,
    symmetric_powers,
)

s3 = get_group("S3")
pi = regular_character(s3.classes)
print("regular character:", pi, "periodic:", is_periodic(pi))

pf = product_form(pi)
print("\ndivisors of |G|:", pf.divisors)
for c, name in enumerate(s3.classes.names):
    print(f"  exponents b_a at {name}:", pf.exponent_at(c))
    recon = expand_product_form(pf, c, 6)
    assert recon == char_poly(pi, c) + [0] * (7 - len(char_poly(pi, c)))

# the same forms through the coset-action shortcut machinery
from symext.genfun import format_poly

spec = subgroup_spec(s3.classes, (0,))  # N = {e}, so Pi is the regular character
forms = burnside_regular_forms(s3.classes, spec, 1)
for c, name in enumerate(s3.classes.names):
    print(f"  lambda_t at {name}:", format_poly(forms.lambda_poly(c)))

print("\nmultiplicity tables of the regular character, degrees 0..10")
for op in ("ext", "sym"):
    mt = multiplicity_table(pi, s3, op, 10)
    print(f"  {op}:")
    for j, lbl in enumerate(s3.labels):
        print(f"    {lbl}:", list(mt.column(j)))

# degrees coprime to |G/N| = 6 admit a one-line answer: an exact multiple of Pi
print("\ncoprime-degree rule:")
syms = symmetric_powers(pi, 7, expect_character=True)
for n in (1, 5, 7):
    if gcd(n, 6) != 1:
        continue
    short = forms.shortcut(n, "sym")
    assert short == syms[n]
    print(f"  S^{n}(Pi) =", dict(zip(s3.labels, decompose(short, s3))))
