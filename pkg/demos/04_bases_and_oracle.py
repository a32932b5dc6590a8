"""Normal-form bases against irreducible words and an exact rank computation."""

from opgs.freealg import BasisFamily, compare_shape, enumerate_basis, presentation

p = presentation("a", [], "N3p")
print("nested-left basis over {a} up to (2,2):")
print("  " + ", ".join(map(str, enumerate_basis(BasisFamily.named("nested_left", p), p, (2, 2)))))

for tag, params, rels in [("N1b", {"lambda": 1}, []), ("U1a", {"lambda": 1, "mu": 1, "nu": 0}, ["a b - a"]),
                          ("U5c", {}, [])]:
    p = presentation("a,b", rels, tag, params)
    shape, irr, oracle = compare_shape(p, (3, 2))
    cells = sorted(shape)
    print("%s with relations %s" % (tag, rels or "none"))
    print("  cells   ", " ".join("%d,%d" % c for c in cells))
    print("  shape   ", " ".join("%3d" % shape[c] for c in cells))
    print("  irr     ", " ".join("%3d" % irr[c] for c in cells))
    print("  oracle  ", " ".join("%3d" % oracle[c] for c in cells))
