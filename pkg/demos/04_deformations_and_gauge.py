"""Order-by-order deformation solving, obstruction classes, and exact
exponential gauge transport.
"""

from fractions import Fraction

from symlie import (Algebra, DeformationSeries, GaugeSeries, SymCochain,
                    coboundary_c1_explicit, gauge_equiv_first_order,
                    gauge_transport, graded_bracket, identity_cochain, make_j2,
                    mc_residual, mc_solve_step, obstruction_class, product_cochain)

# over the zero product every first-order direction is closed, and the
# order-2 equation is solvable exactly when the self-bracket vanishes
Z = Algebra(2, ("e", "u"), [[(0, 0), (0, 0)], [(0, 0), (0, 0)]])

phi_flat = SymCochain(2, 2, {(0, 0): (Fraction(0), Fraction(1))})   # phi(e,e) = u
phi_bump = SymCochain(2, 2, {(0, 0): (Fraction(1), Fraction(0))})   # phi(e,e) = e

for name, phi in (("phi(e,e)=u", phi_flat), ("phi(e,e)=e", phi_bump)):
    s = DeformationSeries(Z, 1, [phi])
    step = mc_solve_step(s, 2)
    br = graded_bracket(phi, phi)
    print(f"{name}: [phi,phi] zero? {br.is_zero()}  order-2 solvable? {step.solvable}")
    if not step.solvable:
        oc = obstruction_class(Z, phi)
        nonzero = sum(1 for x in oc.quotient_coords if x)
        print(f"  obstruction class: in_image={oc.in_image}, "
              f"{nonzero} nonzero quotient coordinates")

# residuals of a solved chain vanish through the solved order
s = DeformationSeries(Z, 1, [phi_flat])
step = mc_solve_step(s, 2)
s = DeformationSeries(Z, 2, [phi_flat, step.solution])
print("residuals through order 2:", [r.is_zero() for r in mc_residual(s, 2)])

# gauge transport: conjugating the product by exp(t f_1 + ...)
A = make_j2(1, 0)
T = GaugeSeries(1, [identity_cochain(2)])
out = gauge_transport(T, A, 2)
print("\ngauge by exp(t id) on j2(1,0):")
print("  order-1 term == -mu:", out.terms[0] == -product_cochain(A))
print("  order-1 term == printed coboundary of id:",
      out.terms[0] == coboundary_c1_explicit(A, identity_cochain(2)))

# first-order gauge equivalence is a linear solve against the printed
# arity-1 coboundary matrix
phi = SymCochain(2, 2, {(0, 1): (Fraction(1), Fraction(0))})
shifted = phi + coboundary_c1_explicit(A, identity_cochain(2))
f = gauge_equiv_first_order(A, phi, shifted)
print("\nrecovered gauge direction for a shifted cocycle:", f is not None)
print("not equivalent to an unreachable direction:",
      gauge_equiv_first_order(A, phi, phi + SymCochain(
          2, 2, {(0, 0): (Fraction(1), Fraction(0))})) is None)
