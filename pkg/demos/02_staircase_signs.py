"""Compositions, the staircase shift, and the signed bialternant.

Adding (n-1, ..., 1, 0) to a composition and sorting either lands on a
partition (with the sign of the sort) or hits a repeated entry (and the
bialternant vanishes).
"""
from itertools import product

from cauchyschur.partitions import normalize, sign_table
from cauchyschur.symfunc import s_mu, s_mu_direct

print("normalize((0,3,0)) ->", normalize((0, 3, 0)))
print("normalize((1,2,1)) ->", normalize((1, 2, 1)))

# Symbolic orbit rows for n = 3: mu_j = lam_k + offset.
for cycles, entries, sign in sign_table(3):
    mu = ", ".join(f"lam{k}{off:+d}" if off else f"lam{k}" for k, off in entries)
    print(f"{cycles:>6}  ({mu})  sign {sign:+d}")

# S_mu through the sort agrees with the literal quotient on a whole box.
zeros = 0
for mu in product(range(4), repeat=3):
    assert s_mu(mu) == s_mu_direct(mu)
    zeros += not s_mu(mu)
print(f"64 compositions checked, {zeros} degenerate")
print("S_(0,3,0) =", s_mu((0, 3, 0)))
