"""Unbounded Cauchy-type identities, checked exactly up to a degree.

Each LHS term is homogeneous, so summing over |lam| <= D gives the true
LHS truncated at degree D and the comparison is exact.
"""
from cauchyschur import verify
from cauchyschur.identities import lhs_unbounded_family, make_context
from cauchyschur.symfunc import Family

for identity in ("cauchy_h", "cauchy_dual_e"):
    r = verify(identity, n=2, m=2, degree=5)
    print(f"{identity:<14} {r.verdict}  ({r.lhs_terms} terms, {r.elapsed_ms:.1f} ms)")

for kind in ("h", "e", "p", "e_plus_h"):
    r = verify("thm1_family", n=2, m=2, degree=4, family=kind)
    print(f"thm1_family {kind:<9} {r.verdict}")

for t_mode in ("distinct", "repeated"):
    r = verify("thm1_t", n=3, degree=4, t_mode=t_mode)
    print(f"thm1_t {t_mode:<9} {r.verdict}")

# One variable each: the family identity is just the geometric series.
ctx = make_context(1, 1, z=True)
print("n=m=1, D=3:", lhs_unbounded_family(1, Family("h", 1), 3, ctx))
