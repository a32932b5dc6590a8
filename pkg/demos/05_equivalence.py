"""Raw identities and their normalized forms generate the same ideal."""

from opgs.freealg import check_equivalence
from opgs.opi import make_opi, primed_form

for tag, params in [("U1", {"a": 2, "b": 1, "c": 2}), ("U1", {"a": 1, "b": 0, "c": 3}), ("U4", {"a": 2}),
                    ("U5", {"a": -1, "b": 1}), ("N2", {"a": 0, "b": 3})]:
    raw = make_opi(tag, params)
    primed, note = primed_form(raw)
    print("%-28s -> %-28s %s" % (raw, primed, check_equivalence(raw, primed, "z", (3, 2))))

# two genuinely different identities
print(check_equivalence(make_opi("U3", {"a": 2}), make_opi("U3p", {"lambda": 3}), "z", (3, 2)))
