"""Rewriting with an operated identity: traces, normal forms, joinability."""

from opgs.opi import make_opi
from opgs.orders import MonomialOrder
from opgs.rewrite import rewriting_system
from opgs.text import parse_poly, parse_word

ABC = "a,b,c"
n3 = make_opi("N3p")
sys = rewriting_system(n3, MonomialOrder("dl", ABC))

trace = []
nf = sys.normal_form(parse_poly("a [b] [c]", ABC), trace=trace)
for before, after in trace:
    print("%s  =>  %s" % (before, after))
print("normal form:", nf)

# a Rota-Baxter style identity of weight 2 over a unital alphabet
rb = make_opi("U1a", {"lambda": 2, "mu": 1, "nu": 2})
sys = rewriting_system(rb, MonomialOrder("db", ABC))
f = parse_poly("[a] [b] [c]", ABC)
print("[a][b][c] reduces to", sys.normal_form(f))
print("is [a b] c irreducible?", sys.is_irreducible(parse_word("[a b] c", ABC)))
