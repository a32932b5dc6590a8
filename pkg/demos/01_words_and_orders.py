"""Bracketed words, their degrees, and how the orders rank them."""

from opgs.orders import MonomialOrder, descending_chain
from opgs.text import parse_word
from opgs.words import Word, deg_g, deg_p, deg_x, words_in_box

AB = "a,b"

w = parse_word("a [b [a]] b", AB)
print("word:", w)
print("  letters %d, brackets %d, generalized degree %d" % (deg_x(w), deg_p(w), deg_g(w)))

# everything with at most 3 letters and 2 brackets
print("words in the (3,2) box over a,b:", len(words_in_box(AB, 3, 2)))

udl = MonomialOrder("udl", AB)
pool = [parse_word(s, AB) for s in ["[a] b", "[a b]", "a [b]", "[[a]]", "a b a"]]
print("sorted under udl:", ", ".join(map(str, sorted(pool, key=udl.key))))

# Dlex is not a well order once brackets are allowed: here is a strictly descending chain
dlex = MonomialOrder("Dlex", AB)
chain = descending_chain(Word(("a",)), Word(("b",)), 5)
for x, y in zip(chain, chain[1:]):
    print("  %s > %s: %s" % (x, y, dlex.cmp(x, y).name == "GT"))
