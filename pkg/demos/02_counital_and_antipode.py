"""
Counital maps on the pair groupoid
==================================

The algebra spanned by matrix units E_ij of the pair groupoid on two objects
is a weak Hopf algebra with identity twist.  Its counital maps project onto
the diagonal subalgebra.
"""

from weakhom import check_antipode, check_counital_identities, counital_maps, groupoid_pair
from weakhom.linear import fmt, identity

H = groupoid_pair(2)
names = ["E11", "E12", "E21", "E22"]
cm = counital_maps(H)


def show(vec):
    return " + ".join(f"{fmt(c)}*{n}" for c, n in zip(vec, names) if c) or "0"


for j, n in enumerate(names):
    print(f"eps_t({n}) = {show(cm.eps_t[:, j])}    eps_s({n}) = {show(cm.eps_s[:, j])}")

print("H_t has rank", cm.Ht.rank)
reports = check_counital_identities(H, cm) + check_antipode(H, cm)
print(sum(r.passed for r in reports), "of", len(reports), "identities hold")

# swapping the antipode for the identity breaks h_1 S(h_2) = eps_t(h)
bad = [r for r in check_antipode(H.replace(antipode=identity(4)), cm) if not r.passed]
first = bad[0]
print(f"with S = id, {first.identity_id} fails at {names[first.witness.index[0]]}")
