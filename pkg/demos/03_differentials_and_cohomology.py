"""Differential matrices, the d-squared comparison, cohomology reports
with validity flags, and derivation algebras.
"""

from symlie import (InsertionMode, check_d_squared, cohomology, corpus_entries,
                    derivations, differential_matrix, make_j2)

SUM = InsertionMode.SUM

A = make_j2(1, 0)
dd = differential_matrix(A, 1, SUM)
print(f"differential matrix at arity 1 on j2(1,0): {dd.matrix.rows} x {dd.matrix.cols}")

# d o d is compared against (1/2) ad_{[mu,mu]} degree by degree; the two
# agree exactly when the inserted argument has odd arity
for n in (0, 1, 2):
    rep = check_d_squared(A, n, SUM)
    print(f"  degree {n}: d∘d == (1/2)ad ? {rep.equal}   both zero? {rep.both_zero}")

# cohomology never assumes d o d = 0: the report says whether the complex
# actually closes at that degree
print("\ncohomology of j2(1,0):")
for n in (0, 1, 2):
    rep = cohomology(A, n, SUM)
    print(f"  degree {n}: dim_ker={rep.dim_kernel} dim_im={rep.dim_image_from_below} "
          f"valid={rep.complex_valid} defect_rank={rep.defect_rank} dim_H={rep.dim_H}")

print("\nderivation algebra dimensions:")
for entry in corpus_entries():
    mats = derivations(entry.algebra)
    print(f"  {entry.name:11s} dim = {len(mats)}")

# the degenerate-discriminant member 4a + b^2 = 0 has a one-parameter
# derivation algebra; print its basis matrix
for D in derivations(make_j2(-1, 2)):
    print("\nj2(-1,2) derivation basis matrix (columns = images of e, u):")
    for row in D.to_strs():
        print("  ", row)
