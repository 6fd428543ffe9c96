"""Hook-length expansions of eta powers and the bridge between them."""
from functools import partial
from fractions import Fraction

from hooklab.cores import make_pair
from hooklab.hooks import (
    CompactSet, bij_product_check, compact_lemma_check, genfunc_pair, no_product, no_rhs,
    pair_Q, pair_rhs, symplectic_hook_sum, typeC_product, typeC_rhs,
)
from hooklab.series import poly_identity_check, power_product

# Nekrasov-Okounkov as an identity of polynomials in z
print(poly_identity_check(partial(no_rhs, order=8), partial(no_product, order=8), 8, lambda m: m))

# type C sum: integer t, fractional t, and the t=-1 collapse
print(typeC_rhs(2, 6) == power_product(10, 6), typeC_rhs(Fraction(1, 2), 6) == power_product(1, 6))
print(poly_identity_check(partial(typeC_rhs, order=8), partial(typeC_product, order=8), 8, lambda m: 2 * m))

print("hook sums:", [str(symplectic_hook_sum(n)) for n in range(1, 6)])

# pairs: the principal-hook product matches the doubled distinct partner
pair = make_pair([], [3, 1])
print("Q =", pair_Q(pair, 2), bij_product_check(pair, 2))
print("pair sum equals type C sum:", pair_rhs(3, 8) == typeC_rhs(3, 8))

print("core pairs, t+1=3:", [int(c) for c in genfunc_pair(3, 12).coeffs])

print(compact_lemma_check(CompactSet(1, frozenset({-1, -2, -3, 1}))))
