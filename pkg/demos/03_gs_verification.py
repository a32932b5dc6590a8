"""Checking that an identity together with base relations is Groebner-Shirshov."""

from opgs.freealg import build_generating_set, presentation
from opgs.gs import verify_gs

for tag, params in [("N3p", {}), ("N1b", {"lambda": 1}), ("U5b", {})]:
    p = presentation("a,b", ["b a - a b"], tag, params)
    gs, _ = build_generating_set(p)
    print("%s over the commutative algebra" % tag)
    print(verify_gs(gs, (3, 2)).summary())
    print()

# over ab = a the differential-type identity needs an extra relation [a] - 2a;
# dropping it leaves a nontrivial composition
p = presentation("a,b", ["a b - a"], "N1c", {"lambda": 2})
for drop in (False, True):
    gs, _ = build_generating_set(p, drop_extra=drop)
    rep = verify_gs(gs, (3, 2))
    print("extra relations dropped:" if drop else "with extra relations:", rep.ok)
    if not rep.ok:
        r = rep.failures[0]
        print("  witness: %s of %s and %s at %s, remainder %s" % (r.kind, r.f, r.g, r.w, r.remainder))
