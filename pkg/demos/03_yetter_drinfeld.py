"""
Yetter-Drinfeld modules and entwinings
======================================

The target subalgebra H_t is a Yetter-Drinfeld module.  Its compatibility
law can be phrased three ways; we corrupt single structure constants and
watch all three verdicts move together.
"""

import itertools

from weakhom import build_entwining, check_entwining, groupoid_pair, identity_pair, unit_object
from weakhom.yd import corrupt, entwined_verdict, equivalent_form_verdict, flip_entwining, yd_verdict

H = groupoid_pair(2)
Ht = unit_object(H)
E = build_entwining(H, identity_pair(H))
print("entwining laws:", [r.status for r in check_entwining(E)])
print("flip entwining fails:", [r.identity_id for r in check_entwining(flip_entwining(H))
                                if not r.passed])

agree = total = 0
for which in ("action", "coaction", "mu"):
    for idx in itertools.product(*(range(s) for s in getattr(Ht, which).shape)):
        try:
            M = corrupt(Ht, which, idx)
        except ArithmeticError:
            continue
        v = (yd_verdict(M), equivalent_form_verdict(M), entwined_verdict(M, E))
        agree += len(set(v)) == 1
        total += 1
print(f"{agree}/{total} corruptions give three identical verdicts")
