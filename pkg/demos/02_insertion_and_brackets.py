"""The unshuffle insertion in both normalizations, and what the graded
commutator does and does not satisfy.
"""

from fractions import Fraction

from symlie import (InsertionMode, check_jacobi, check_prelie, graded_bracket,
                    identity_cochain, insert, insert_lowdeg_variant, make_j2,
                    product_cochain, unshuffles)

SUM, PAPER = InsertionMode.SUM, InsertionMode.PAPER

# unshuffles: ways to split arguments between the outer and inner map
print("(2,2)-unshuffles of {0..3}:")
for first, second in unshuffles(2, 2):
    print("  outer slots", first, " inner slots", second)

A = make_j2(1, 0)   # e unit, u*u = e
mu = product_cochain(A)

# the two normalizations differ by the prefactor 1/((m-1)! n!)
print("\n(mu o mu)(u,u,u):")
print("  sum   mode:", insert(mu, mu, SUM).value_at((1, 1, 1)))     # 3 u
print("  paper mode:", insert(mu, mu, PAPER).value_at((1, 1, 1)))   # 3/2 u
print("two-term arity-2 variant:", insert_lowdeg_variant(mu, mu).value_at((1, 1, 1)))

# [mu, mu] = 2 (mu o mu) since |mu| = 1 is odd; nonzero even though the
# algebra is Jordan -- the central discrepancy the audit documents
br = graded_bracket(mu, mu, SUM)
print("\n[mu,mu](u,u,u) in sum mode:", br.value_at((1, 1, 1)))

# [id, mu]: the composite prefactors make the modes disagree
i = identity_cochain(2)
print("[id,mu] sum   == -mu:", graded_bracket(i, mu, SUM) == -mu)
print("[id,mu] paper == -3/2 mu:", graded_bracket(i, mu, PAPER) == mu.scale(Fraction(-3, 2)))

# the graded pre-Lie identity fails when both inserted arguments have even
# arity: the sign-free associator is plainly symmetric in (g, h), and the
# Koszul sign (-1)^{|g||h|} = -1 would force it to vanish
rep = check_prelie(mu, mu, mu, SUM)
print("\ngraded pre-Lie on (mu,mu,mu), sum mode:", "holds" if rep.holds else "fails")
print("graded Jacobi on (mu,mu,mu), sum mode:",
      "holds" if check_jacobi(mu, mu, mu, SUM).holds else "fails")

# with odd arities (even degrees) every Koszul sign is +1 and the graded
# identities reduce to the honest vector-field identities, which do hold
f = identity_cochain(2)
print("graded Jacobi on (id,id,id):", "holds" if check_jacobi(f, f, f, SUM).holds else "fails")
