"""Identity checkers on the built-in corpus.

Three separate checkers are exposed on purpose: the cubic identity, the
cyclic six-term sum, and the linearized operator identity are NOT
equivalent, and the corpus is chosen to separate them.
"""

from symlie import (check_cubic_jordan, check_operator_identity, check_six_term,
                    corpus_entries, find_unit)

for entry in corpus_entries():
    A = entry.algebra
    cubic = check_cubic_jordan(A)
    sixterm = check_six_term(A)
    operator = check_operator_identity(A)
    unit = find_unit(A)
    print(f"{entry.name:11s} dim={A.dim}  unit={'yes' if unit else 'no '}  "
          f"cubic={'holds' if cubic.holds else 'fails'}  "
          f"six_term={'holds' if sixterm.holds else 'fails'}  "
          f"operator={'holds' if operator.holds else 'fails'}")

# the spin factor separates cubic from operator: it is a honest Jordan
# algebra on which L_{x*x} != L_x L_x
spin = corpus_entries()[3].algebra
rep = check_operator_identity(spin)
print("\nspin_1_1 operator witness:")
print("  inputs:", [spin.render_vector(v) for v in rep.witness.inputs])
print("  left  =", spin.render_vector(rep.witness.left))
print("  right =", spin.render_vector(rep.witness.right))

# the control fails the cubic identity at x = y = v
nj = corpus_entries()[4].algebra
rep = check_cubic_jordan(nj)
print("\nnon_jordan cubic witness:")
print("  inputs:", [nj.render_vector(v) for v in rep.witness.inputs])
print("  left  =", nj.render_vector(rep.witness.left))
print("  right =", nj.render_vector(rep.witness.right))
