"""Sample the Levine-Tristram signature function around the circle.

The exact code only evaluates at roots of unity of order 2, 3, 4 — that is
all the filling constraints need — but the floating-point sampler works at
any omega = exp(2*pi*i*t) and shows the familiar step function.  The exact
values pin down the jumps.
"""

import cmath

from braidgeo import BraidWord, lt_value, root_of_unity, torus_braid, zeta
from braidgeo.seifert import bennequin_seifert
from braidgeo.signatures import lt_value_float

for label, word in (
    ("trefoil  (sigma_1^3)", BraidWord(2, (1, 1, 1))),
    ("T(2,11)", torus_braid(2, 11)),
    ("T(3,5)", torus_braid(3, 5)),
):
    data = bennequin_seifert(word)
    print(label)
    samples = []
    for k in range(1, 20):
        t = k / 20
        value = lt_value_float(data, cmath.exp(2j * cmath.pi * t))
        samples.append((t, value.sigma))
    run_start = samples[0]
    for (t, s), (t2, s2) in zip(samples, samples[1:] + [(1.0, None)]):
        if s2 != s:
            print(f"  sigma = {s:3d} on t in ({run_start[0]:.2f}, {t:.2f})")
            run_start = (t2, s2)
    for order in (2, 3, 4):
        exact = lt_value(data, root_of_unity(order, 1))
        print(f"  exact at zeta_{order}: sigma = {exact.sigma}, "
              f"eta = {exact.eta}")
    print()

# the trefoil anchor, exactly: sigma jumps to -2 at t = 1/3 and stays
trefoil = bennequin_seifert(BraidWord(2, (1, 1, 1)))
assert lt_value(trefoil, zeta(3)).sigma == -2
assert lt_value(trefoil, root_of_unity(2, 1)).sigma == -2
print("trefoil: sigma(zeta_3) = sigma(-1) = -2, exactly")
