"""
A ten-dimensional weak monoidal Hom-bialgebra
=============================================

Build the parametrized example, run its laws and look at what goes wrong
when the twist matrix is read with an extra off-diagonal entry.
"""

from fractions import Fraction

from weakhom import check_hom_algebra, example_2_10, failures, weak_hom_bialgebra_suite
from weakhom.checks import is_strict_monoidal_hom

# the diagonal twist diag(1, 1, 1, l, l, 1, 1, 1, l, l) for a few parameters
for lam in (Fraction(2), Fraction(-1), Fraction(1, 3)):
    H = example_2_10(lam)
    reports = weak_hom_bialgebra_suite(H)
    print(f"lambda = {lam}: {len(reports)} identities, {len(failures(reports))} failures")

# Delta(1) is not 1 (x) 1, so the structure is genuinely weak
H = example_2_10(2)
print("strict?", is_strict_monoidal_hom(H))

# the variant with xi(x_8) = x_3 + x_8 breaks unitality
P = example_2_10(2, xi="printed")
for r in failures(check_hom_algebra(P)):
    w = r.witness
    print(f"{r.identity_id} fails at x_{w.index[0] + 1}")
    print("  lhs", [str(v) for v in w.lhs])
    print("  rhs", [str(v) for v in w.rhs])
