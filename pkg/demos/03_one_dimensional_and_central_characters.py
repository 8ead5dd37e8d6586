"""Shortcut rules: powers of one-dimensional and central characters.

One-dimensional characters have the simplest possible power structure:
S^i(chi) = chi^i, so the whole generating function is t^i/(1-t^q) with q the
multiplicative order of chi.  A one-dimensional character of a central
normal subgroup, extended by zero and scaled, covers the irreducible
p-dimensional characters of the Heisenberg group mod p; their symmetric and
exterior powers come out in closed form.
"""

from symext import (
    central_forms,
    decompose,
    exterior_powers,
    genfun_rational,
    get_group,
    one_dim_forms,
    symmetric_powers,
)
from symext.catalog import central_characters, family_closed_form

s3 = get_group("S3")
sign = s3.character("chi2")
forms = one_dim_forms(sign, s3)
print("order of the sign character:", forms.order)
for j, lbl in enumerate(s3.labels):
    rf = forms.genfun(j)
    engine = genfun_rational(sign, s3, j, "sym")
    assert rf == engine
    print(f"  <{lbl}, S_t(sign)> = {rf}")

# Heisenberg group mod 3: tau_s = p * (zeta_s extended by zero)
p = 3
hp = get_group("Hp", p)
spec = central_characters("Hp", p)["zeta_1"]
forms = central_forms(hp.classes, spec)
tau1 = forms.character()
assert tau1 == hp.character("tau_1")
print("\nHeisenberg mod 3, character tau_1; per-class lambda_t:")
for c in (0, 1, 3):
    print(f"  at {hp.classes.names[c]}:", forms.lambda_poly(c))

lams = exterior_powers(tau1, 2 * p, expect_character=True)
syms = symmetric_powers(tau1, 2 * p, expect_character=True)
print("\nexterior and symmetric powers of tau_1:")
for n in range(2 * p + 1):
    ext_named = {hp.labels[j]: q for j, q in enumerate(decompose(lams[n], hp)) if q}
    sym_named = {hp.labels[j]: q for j, q in enumerate(decompose(syms[n], hp)) if q}
    assert ext_named == family_closed_form("Hp", p, 1, "ext", n)
    assert sym_named == family_closed_form("Hp", p, 1, "sym", n)
    print(f"  n={n}: ext {ext_named or 0}")
    print(f"       sym {sym_named}")
print("\nnote the collapse at n = p: the p-th exterior power is trivial,")
print("and beyond p every exterior power vanishes")
