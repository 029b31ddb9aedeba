"""Bounded sums over lam <= (a_1, ..., a_n) are exact polynomial identities."""
from cauchyschur import verify
from cauchyschur.cli import render_worked_table
from cauchyschur.identities import macdonald_rhs

text, _ = render_worked_table()
print(text)
print()

cases = [
    ("bounded_family", dict(n=2, m=2, bounds=(2, 2), family="e")),
    ("bounded_family", dict(n=2, m=2, bounds=(3, 2), family="h")),
    ("bounded_t", dict(n=3, bounds=(3, 2, 1), t_mode="distinct")),
    ("bounded_t", dict(n=3, bounds=(1, 1, 1), t_mode="ones")),
    ("macdonald", dict(n=3, bounds=(2, 2, 2))),
]
for identity, params in cases:
    print(f"{identity:<15} {params}  ->  {verify(identity, **params).verdict}")

# With a = 1 every partition is a column of ones and the sum factors.
print("Macdonald n=2, a=1:", macdonald_rhs(2, 1))
