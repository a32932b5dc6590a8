"""Operated polynomial identities (OPIs) and their catalog.

An OPI is a polynomial in variable letters ``x`` (and ``y``).  Substituting
words for the variables gives its instances; the set of all instances over
an alphabet is written ``S`` below.  The catalog holds the normalized
(primed) families, and the raw families that they were reduced from,
together with the case analysis mapping a raw family to a primed one.
"""

from dataclasses import dataclass, field
from itertools import product

from .orders import OrderKind
from .poly import OpPoly, as_fraction
from .text import parse_poly
from .words import Bracket, Word, words_in_box

VARIABLES = ("x", "y")


class OpiError(ValueError):
    pass


@dataclass(frozen=True)
class Opi:
    tag: str
    pattern: OpPoly
    variables: tuple
    params: tuple = ()
    unital: bool = False

    def __post_init__(self):
        check_multilinear(self.pattern, self.variables)

    @property
    def arity(self):
        return len(self.variables)

    @property
    def entry(self):
        return CATALOG[self.tag]

    def param(self, name):
        for k, v in self.params:
            if k == name:
                return v
        raise KeyError(name)

    @property
    def param_dict(self):
        return dict(self.params)

    def __str__(self):
        ps = ", ".join("%s=%s" % kv for kv in self.params)
        return "%s(%s)" % (self.tag, ps) if ps else self.tag


@dataclass(frozen=True)
class CatalogEntry:
    tag: str
    params: tuple
    unital: bool
    terms: object                 # params -> list of (coefficient, pattern text)
    order: OrderKind = None       # default monomial order
    lead: str = None              # declared leading pattern
    verdict: str = "gs"           # "gs", "isomorphic" (free object is A) or "vanishes"
    raw: bool = False
    aliases: tuple = ()
    constraint: object = None     # params -> error message or None
    note: str = field(default="", compare=False)


CATALOG = {}
_ALIASES = {}


def _register(entry):
    CATALOG[entry.tag] = entry
    for a in entry.aliases:
        _ALIASES[a] = entry.tag


def _rb_constraint(p):
    l, m, n = p["lambda"], p["mu"], p["nu"]
    if l * l != l * m + n:
        return "parameters must satisfy lambda^2 = lambda*mu + nu (got %s, %s, %s)" % (l, m, n)
    return None


def _raw1_constraint(p):
    a, b, c = p["a"], p["b"], p["c"]
    if a * a != a + b * c:
        return "parameters must satisfy a^2 = a + b*c (got %s, %s, %s)" % (a, b, c)
    return None


def _rb_like(p):
    l, m, n = p["lambda"], p["mu"], p["nu"]
    return [(1, "[x][y]"), (-l, "x[y]"), (-l, "[x]y"), (m, "[xy]"), (n, "xy")]


def _diff_like(p):
    return [(1, "x[y]"), (-1, "[xy]"), (1, "[x]y"), (-p["lambda"], "xy")]


def _mult(p):
    return [(1, "[xy]"), (-p["lambda"], "xy")]


def _twisted(p):
    l, m = p["lambda"], p["mu"]
    return [(1, "[x][y]"), (-l, "x[y]"), (-l, "[x]y"), (m, "[yx]"), (l * l, "xy"), (-l * m, "yx")]


def _unit_insert(p):
    l = p["lambda"]
    return [(1, "[x]"), (l, "x[1]"), (-(l + 1), "[1]x")]


def _scalar(p):
    return [(1, "[x]"), (-p["lambda"], "x")]


for unital, pre in ((False, "N"), (True, "U")):
    _register(CatalogEntry(pre + "1a", ("lambda", "mu", "nu"), unital, _rb_like, OrderKind.DB, "[x][y]",
                           constraint=_rb_constraint))
    _register(CatalogEntry(pre + "2a", ("lambda", "mu"), unital, _twisted, OrderKind.DB, "[x][y]"))

_register(CatalogEntry("N1b", ("lambda",), False, _diff_like, OrderKind.DL, "x[y]"))
_register(CatalogEntry("N1c", ("lambda",), False, _mult, OrderKind.DB, "[xy]", aliases=("N2b",)))
_register(CatalogEntry("N3p", (), False, lambda p: [(1, "x[y]"), (-1, "[xy]")], OrderKind.DL, "x[y]"))
_register(CatalogEntry("N4p", (), False, lambda p: [(1, "[x]y"), (-1, "[xy]")], OrderKind.DL2, "[x]y"))

_register(CatalogEntry("U1b", ("lambda",), True, _diff_like, OrderKind.UDL, "x[y]", aliases=("U5a",)))
_register(CatalogEntry("U1c", ("lambda",), True, _scalar, OrderKind.DB, "[x]", verdict="isomorphic",
                       aliases=("U2b", "U6b")))
_register(CatalogEntry("U3p", ("lambda",), True, _unit_insert, OrderKind.DB, "[x]", aliases=("U4p", "U6a")))
_register(CatalogEntry("U5b", (), True,
                       lambda p: [(1, "x[y]"), (-1, "[xy]"), (1, "[x]y"), (-1, "x[1]y")],
                       OrderKind.UDL, "x[y]"))
_register(CatalogEntry("U5c", (), True, lambda p: [(1, "x")], OrderKind.DB, "x", verdict="vanishes",
                       aliases=("U6c",)))

# raw families
for unital, pre in ((False, "N"), (True, "U")):
    _register(CatalogEntry(pre + "1", ("a", "b", "c"), unital,
                           lambda p: [(1, "[xy]"), (-p["a"], "x[y]"), (-p["a"], "[x]y"),
                                      (-p["b"], "[x][y]"), (-p["c"], "xy")],
                           raw=True, constraint=_raw1_constraint))
    _register(CatalogEntry(pre + "2", ("a", "b"), unital,
                           lambda p: [(1, "[xy]"), (-p["a"] * p["b"] ** 2, "yx"), (-p["b"], "xy"),
                                      (-p["a"], "[y][x]"), (p["a"] * p["b"], "y[x]"),
                                      (p["a"] * p["b"], "[y]x")],
                           raw=True))

_register(CatalogEntry("N3", (), False, lambda p: [(1, "[xy]"), (-1, "x[y]")], raw=True))
_register(CatalogEntry("N4", (), False, lambda p: [(1, "[xy]"), (-1, "[x]y")], raw=True))
_register(CatalogEntry("U3", ("a",), True,
                       lambda p: [(1, "[xy]"), (-1, "x[y]"), (-p["a"], "x[1]y"), (p["a"], "[1]xy")], raw=True))
_register(CatalogEntry("U4", ("a",), True,
                       lambda p: [(1, "[xy]"), (-1, "[x]y"), (-p["a"], "x[1]y"), (p["a"], "xy[1]")], raw=True))
_register(CatalogEntry("U5", ("a", "b"), True,
                       lambda p: [(1, "[xy]"), (-1, "x[y]"), (-1, "[x]y"), (-p["a"], "x[1]y"), (-p["b"], "xy")],
                       raw=True))
_register(CatalogEntry("U6", ("l00", "l10", "l01"), True,
                       lambda p: [(1, "[xy]"), (-p["l10"], "[1]xy"), (-p["l01"], "xy[1]"), (-p["l00"], "xy")],
                       raw=True))


def canonical_tag(tag):
    if tag in CATALOG:
        return tag
    if tag in _ALIASES:
        return _ALIASES[tag]
    # accept primed spellings such as N3' or U1'a
    if "'" in tag:
        t = tag.replace("'", "")
        if t[-1:].isdigit():
            t += "p"
        if t in CATALOG:
            return t
        if t in _ALIASES:
            return _ALIASES[t]
    raise OpiError("unknown OPI tag %r (known: %s)" % (tag, ", ".join(sorted(CATALOG))))


def make_opi(tag, params=None, **kw):
    """Build a catalog OPI, e.g. ``make_opi("N1b", {"lambda": 1})``."""
    tag = canonical_tag(tag)
    entry = CATALOG[tag]
    given = dict(params or {})
    given.update(kw)
    if "lam" in given and "lambda" not in given:
        given["lambda"] = given.pop("lam")
    unknown = set(given) - set(entry.params)
    if unknown:
        raise OpiError("%s takes parameters %s, got unexpected %s" % (tag, list(entry.params), sorted(unknown)))
    missing = [p for p in entry.params if p not in given]
    if missing:
        raise OpiError("%s needs parameters %s" % (tag, missing))
    vals = {k: as_fraction(given[k]) for k in entry.params}
    if entry.constraint:
        msg = entry.constraint(vals)
        if msg:
            raise OpiError("%s: %s" % (tag, msg))
    pattern = OpPoly()
    for c, text in entry.terms(vals):
        pattern = pattern + parse_poly(text).scale(c)
    used = sorted({v for w in pattern.support() for v in _letters(w)})
    variables = tuple(v for v in VARIABLES if v in used) or ("x",)
    return Opi(tag, pattern, variables, tuple((k, vals[k]) for k in entry.params), entry.unital)


def check_multilinear(pattern, variables):
    """Every monomial must use each variable exactly once."""
    if not pattern:
        raise OpiError("an OPI pattern must be nonzero")
    for w in pattern.support():
        used = [f for f in _letters(w) if f in variables]
        if sorted(used) != sorted(variables):
            raise OpiError("pattern monomial %s does not use each of %s exactly once" % (w, ", ".join(variables)))
        other = [f for f in _letters(w) if f not in variables]
        if other:
            raise OpiError("pattern monomial %s contains non-variable letters %s" % (w, other))


def _letters(w):
    for f in w:
        if isinstance(f, Bracket):
            yield from _letters(f.inner)
        else:
            yield f


def substitute_vars(w, binding):
    """Replace variable letters of a pattern word by words (splicing)."""
    out = []
    for f in w:
        if isinstance(f, Bracket):
            out.append(Bracket(substitute_vars(f.inner, binding)))
        elif f in binding:
            out.extend(binding[f])
        else:
            out.append(f)
    return Word(out)


def substitute_poly(f, binding):
    return OpPoly((substitute_vars(w, binding), c) for w, c in f.items())


def instantiate(opi, args):
    """The instance of ``opi`` at the given argument words."""
    args = tuple(args)
    if len(args) != opi.arity:
        raise OpiError("%s has arity %d, got %d arguments" % (opi.tag, opi.arity, len(args)))
    for a in args:
        if not isinstance(a, Word):
            raise TypeError("arguments must be words, got %r" % (a,))
        if not a and not opi.unital:
            raise OpiError("the unit is not a valid argument for the nonunital %s" % opi.tag)
    return substitute_poly(opi.pattern, dict(zip(opi.variables, args)))


def argument_words(alphabet, bound, unital):
    return words_in_box(alphabet, bound[0], bound[1], unital=unital)


def generate_s(opi, alphabet, bound):
    """Distinct nonzero instances with every argument graded within ``bound``."""
    words = argument_words(alphabet, bound, opi.unital)
    seen = set()
    out = []
    for args in product(words, repeat=opi.arity):
        s = instantiate(opi, args)
        if s and s not in seen:
            seen.add(s)
            out.append(s)
    return out


# raw -> primed case analysis ---------------------------------------------------

def primed_form(opi):
    """The primed catalog OPI that a raw OPI is equivalent to.

    Returns ``(primed, note)`` where ``note`` names the branch taken.
    """
    if not opi.entry.raw:
        return opi, "already primed"
    p = opi.param_dict
    u = opi.unital
    pre = "U" if u else "N"
    t = opi.tag[1:]
    if t == "1":
        a, b, c = p["a"], p["b"], p["c"]
        if b != 0:
            return make_opi(pre + "1a", {"lambda": -a / b, "mu": -1 / b, "nu": c / b}), "b != 0"
        if a == 0:
            tag = "U1c" if u else "N1c"
            return make_opi(tag, {"lambda": c}), "b = 0, a = 0"
        return make_opi(pre + "1b", {"lambda": -c}), "b = 0, a = 1"
    if t == "2":
        a, b = p["a"], p["b"]
        if a != 0:
            return make_opi(pre + "2a", {"lambda": b, "mu": -1 / a}), "a != 0"
        return make_opi("U1c" if u else "N1c", {"lambda": b}), "a = 0"
    if t == "3":
        if not u:
            return make_opi("N3p"), "nonunital"
        return make_opi("U3p", {"lambda": -(1 + p["a"])}), "unital"
    if t == "4":
        if not u:
            return make_opi("N4p"), "nonunital"
        return make_opi("U3p", {"lambda": p["a"]}), "unital"
    if t == "5":
        a, b = p["a"], p["b"]
        if a != -1:
            return make_opi("U1b", {"lambda": -b / (a + 1)}), "a != -1"
        if b == 0:
            return make_opi("U5b"), "a = -1, b = 0"
        return make_opi("U5c"), "a = -1, b != 0"
    if t == "6":
        l00, l10, l01 = p["l00"], p["l10"], p["l01"]
        s = l10 + l01
        if s != 1:
            return make_opi("U1c", {"lambda": l00 / (1 - s)}), "l10 + l01 != 1"
        if l00 == 0:
            return make_opi("U3p", {"lambda": -l01}), "l10 + l01 = 1, l00 = 0"
        return make_opi("U5c"), "l10 + l01 = 1, l00 != 0"
    raise OpiError("no case analysis for %s" % opi.tag)


def catalog_tags(raw=None, unital=None):
    out = []
    for tag, e in CATALOG.items():
        if raw is not None and e.raw != raw:
            continue
        if unital is not None and e.unital != unital:
            continue
        out.append(tag)
    return out

