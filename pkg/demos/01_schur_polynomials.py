"""Four routes to the same Schur polynomial.

Run with ``python demos/01_schur_polynomials.py``.
"""
from cauchyschur import schur
from cauchyschur.partitions import conjugate, enum_by_weight
from cauchyschur.symfunc import dual_jacobi_trudi, ssyt

# The bialternant: alternant det(x_j^(lam_i + n - i)) divided exactly by the Vandermonde.
s = schur((2, 1), 2)
print("s_(2,1)(x1, x2) =", s)

# Jacobi-Trudi expands det(h_{lam_i - i + j}); the tableau sum is fully combinatorial.
lam, n = (3, 1, 0), 3
for method in ("bialternant", "jacobi_trudi", "dual_jacobi_trudi", "ssyt"):
    print(f"{method:>18}: {schur(lam, n, method)}")

# Each semistandard tableau contributes one monomial.
print("tableaux of shape (2,1) in 3 letters:", len(list(ssyt((2, 1), 3))))

# det(e_{lam_i - i + j}) is the Schur polynomial of the conjugate shape.
print("det(e) for (2,2):", dual_jacobi_trudi((2, 2), 2), "=", schur(conjugate((2, 2)), 2))

# s_lam is homogeneous of degree |lam|.
for lam in enum_by_weight(2, 3):
    print(lam, "degree", schur(lam, 2).degree(), "terms", len(schur(lam, 2)))
