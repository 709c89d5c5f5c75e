"""
The PM-monoid R_n: elements are pairs (permutation, ordered set partition).

Walks through the product, the star operation, counting, and the double-coset decomposition.
"""
from pmmonoid.pm_core import (PMElement, StandardComposition, enumerate_rn, idempotents, matched_pair_check,
                              rn_count_multinomial, rn_count_stirling, standard_compositions, wew_class)

# %% A few elements of R_3
s1 = PMElement.s(3, 1)
e1 = PMElement.e(StandardComposition(3, (1,)))
print("s1        =", s1)
print("e[1]      =", e1)
print("s1 * e[1] =", s1 * e1)
print("e[1] * s1 =", e1 * s1)

# %% The star map gives a generalized inverse
a = e1 * s1
print("a* =", a.star(), " a a* a == a:", a * a.star() * a == a)

# %% Idempotents need not commute, so inverses are not unique
e, f = (x for x in idempotents(2) if len(x.partition) == 2)
print("e f =", e * f, "  f e =", f * e)

# %% Counting: enumeration against two closed forms
for n in range(1, 5):
    print(f"n={n}: |R_n| = {len(enumerate_rn(n))} = {rn_count_stirling(n)} = {rn_count_multinomial(n)}")

# %% R_3 splits into double cosets W e W, one per standard composition
for comp in standard_compositions(3):
    print(f"{comp}: {len(wew_class(comp))} elements")

# %% The matched pair (P_n, S_n) satisfies its eight axioms
print("matched pair, n=3:", matched_pair_check(3).ok)
