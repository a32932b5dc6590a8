"""Free operated algebras satisfying an OPI over a base algebra ``A = k<Z>/(G)``.

Besides building the generating set, this module enumerates the
combinatorial bases predicted for each family, and computes quotient
dimensions by an independent route: exact rank of the bounded ideal span,
without any monomial order or rewriting.
"""

import warnings
from dataclasses import dataclass, field
from itertools import product

from .gs import GeneratorSet, verify_gs
from .linalg import Echelon, self_reduced_basis
from .opi import Opi, OpiError, instantiate, make_opi, primed_form
from .orders import MonomialOrder, OrderKind
from .poly import OpPoly, apply_star
from .words import Alphabet, Bracket, Word, grade, levels, star_word_at, words_in_box


class PresentationError(ValueError):
    pass


class ClosureError(ValueError):
    """Some relation is not dominated by one of its own monomials in grade."""


@dataclass
class Presentation:
    """An alphabet ``Z``, a dlex GS basis ``G`` of relations, and an OPI."""

    alphabet: Alphabet
    relations: tuple = ()
    opi: Opi = None
    unital: bool = False
    order: OrderKind = None
    notes: list = field(default_factory=list)

    def __post_init__(self):
        self.alphabet = Alphabet.coerce(self.alphabet)
        self.relations = tuple(g for g in self.relations if g)
        if self.order is not None:
            self.order = OrderKind.parse(self.order)
        if self.opi is not None and self.opi.unital != self.unital:
            raise PresentationError("%s is %s but the presentation is %s"
                                    % (self.opi, "unital" if self.opi.unital else "nonunital",
                                       "unital" if self.unital else "nonunital"))
        allowed = set(self.alphabet)
        for g in self.relations:
            for w in g.support():
                for f in w:
                    if isinstance(f, Bracket):
                        raise PresentationError("relation %s is not bracket-free" % g)
                    if f not in allowed:
                        raise PresentationError("relation %s uses letter %r outside the alphabet" % (g, f))
                if not w and not self.unital:
                    raise PresentationError("relation %s has a constant term in the nonunital case" % g)
        self.dlex = MonomialOrder(OrderKind.DLEX, self.alphabet)
        self.relations = tuple(_monic(g, self.dlex) for g in self.relations)
        self._check_relations()

    def _check_relations(self):
        if not self.relations:
            return
        n = max(len(self.dlex.leading(g)[0]) for g in self.relations)
        gs = GeneratorSet(None, self.alphabet, self.dlex, self.relations, unital=self.unital)
        rep = verify_gs(gs, (n, 0))
        if not rep.ok:
            bad = rep.failures[0]
            raise PresentationError("relations are not a Groebner-Shirshov basis under dlex: "
                                    "%s of %s and %s leaves %s" % (bad.kind, bad.f, bad.g, bad.remainder))

    @property
    def order_kind(self):
        if self.order is not None:
            return self.order
        if self.opi is None:
            return OrderKind.DLEX
        if self.opi.entry.order is None:
            raise PresentationError("%s has no default order; pass one explicitly" % self.opi.tag)
        return self.opi.entry.order

    @property
    def monomial_order(self):
        return MonomialOrder(self.order_kind, self.alphabet)

    @property
    def verdict(self):
        return self.opi.entry.verdict if self.opi is not None else "gs"

    def relation_leads(self):
        return [self.dlex.leading(g)[0] for g in self.relations]


def _monic(f, order):
    _, c = order.leading(f)
    return f if c == 1 else f.scale(1 / c)


def presentation(alphabet, relations=(), opi=None, params=None, unital=None, order=None):
    """Convenience constructor accepting tags, text relations and alphabets."""
    from .text import parse_poly
    alphabet = Alphabet.coerce(alphabet)
    if isinstance(opi, str):
        opi = make_opi(opi, params or {})
    if unital is None:
        unital = opi.unital if opi is not None else False
    rels = [parse_poly(r, alphabet) if isinstance(r, str) else r for r in relations]
    return Presentation(alphabet, tuple(rels), opi, unital, order)


# linear parts ---------------------------------------------------------------------

def linear_part(g):
    """Projection onto the span of single letters."""
    return OpPoly((w, c) for w, c in g.items() if len(w) == 1 and isinstance(w[0], str))


def linear_parts_basis(relations, alphabet):
    """Linearly self-reduced basis of the span of the linear parts of ``relations``."""
    alphabet = Alphabet.coerce(alphabet)
    rank = alphabet.rank
    vecs = []
    for g in relations:
        lp = linear_part(g)
        if lp:
            vecs.append({rank[w[0]]: c for w, c in lp.items()})
    rows = self_reduced_basis(vecs)
    letters = alphabet.letters
    return [OpPoly((Word((letters[k],)), c) for k, c in row.items()) for row in rows]


def extra_relations(p):
    """Extra generators needed beyond ``S`` and ``G`` for the multiplicative family."""
    if p.opi is None or p.opi.tag != "N1c" or not p.relations:
        return []
    lam = p.opi.param("lambda")
    out = []
    for g in linear_parts_basis(p.relations, p.alphabet):
        out.append(g.bracket() - g.scale(lam))
    return out


def build_generating_set(p, drop_extra=False):
    """The generating set for ``p`` and the family verdict.

    The verdict is ``"gs"``, ``"isomorphic"`` (the free object is the base
    algebra itself) or ``"vanishes"``.
    """
    if p.opi is None:
        raise PresentationError("no OPI given")
    if p.opi.entry.raw:
        primed, _ = primed_form(p.opi)
        raise PresentationError("%s is a raw family; it is equivalent to %s" % (p.opi, primed))
    default = p.opi.entry.order
    if p.order is not None and default is not None and p.order != default:
        warnings.warn("%s is normally used with %s, not %s" % (p.opi.tag, default.value, p.order.value))
    extra = [] if drop_extra else extra_relations(p)
    gs = GeneratorSet(p.opi, p.alphabet, p.monomial_order, p.relations, extra, p.unital)
    return gs, p.verdict


# basis shapes ---------------------------------------------------------------------

SHAPES = ("rb", "nested_left", "right_nested", "unit_insert", "phi4", "base", "empty")

_AUTO = {
    "N1a": ("rb", False), "N2a": ("rb", False), "U1a": ("rb", False), "U2a": ("rb", False),
    "N1b": ("nested_left", False), "N3p": ("nested_left", False),
    "U1b": ("nested_left", False), "U5b": ("nested_left", True),
    "N4p": ("right_nested", False),
    "U3p": ("unit_insert", False),
    "N1c": ("phi4", False),
    "U1c": ("base", False),
    "U5c": ("empty", False),
}


@dataclass(frozen=True)
class BasisFamily:
    shape: str
    dagger: bool = False   # treat [1] as an extra letter inside runs

    @classmethod
    def auto(cls, p):
        if p.opi is None:
            return cls("base")
        shape, dagger = _AUTO[p.opi.tag]
        return cls(shape, dagger)

    @classmethod
    def named(cls, name, p=None):
        if name == "auto":
            return cls.auto(p)
        if name not in SHAPES:
            raise ValueError("unknown basis shape %r (choose from auto, %s)" % (name, ", ".join(SHAPES)))
        dagger = name == "nested_left" and p is not None and p.opi is not None and p.opi.tag == "U5b"
        return cls(name, dagger)


DAGGER = Bracket(Word())


class _Builder:
    def __init__(self, p, family, bound):
        self.p = p
        self.family = family
        self.bound = bound
        self.leads = [tuple(w) for w in p.relation_leads()]
        self.letters = tuple(p.alphabet)
        self._runs = {}

    def _avoids(self, run):
        for lead in self.leads:
            n = len(lead)
            for i in range(len(run) - n + 1):
                if run[i:i + n] == lead:
                    return False
        return True

    def runs(self, x, p, nonempty, dagger=None, letters=None):
        """Bracket-free runs avoiding the relation leads, grade within ``(x, p)``."""
        dagger = self.family.dagger if dagger is None else dagger
        letters = letters or self.letters
        key = (x, p, nonempty, dagger, letters)
        if key in self._runs:
            return self._runs[key]
        alphabet = letters + ((DAGGER,) if dagger else ())
        out = []
        frontier = [()]
        while frontier:
            nxt = []
            for r in frontier:
                if r or not nonempty:
                    out.append(Word(r))
                for a in alphabet:
                    s = r + (a,)
                    g = grade(s)
                    if g[0] <= x and g[1] <= p and self._avoids(s):
                        nxt.append(s)
            frontier = nxt
        self._runs[key] = out
        return out


def _sub(b, w):
    g = grade(w)
    return b[0] - g[0], b[1] - g[1]


def _rb(bd, unital):
    memo = {}

    def words(x, p):
        key = (x, p)
        if key in memo:
            return memo[key]
        out = list(bd.runs(x, p, nonempty=not unital, dagger=False))
        for u0 in bd.runs(x, p, nonempty=False, dagger=False):
            for t in tails(*_sub((x, p), u0)):
                out.append(u0 * t)
        memo[key] = out
        return out

    tmemo = {}

    def tails(x, p):
        key = (x, p)
        if key in tmemo:
            return tmemo[key]
        out = []
        if p >= 1:
            for v in words(x, p - 1):
                b = Word((Bracket(v),))
                rest = _sub((x, p), b)
                for u in bd.runs(*rest, nonempty=False, dagger=False):
                    out.append(b * u)
                for u in bd.runs(*rest, nonempty=True, dagger=False):
                    for t in tails(*_sub(rest, u)):
                        out.append(b * u * t)
        tmemo[key] = out
        return out

    return words


def _nested_left(bd, unital):
    memo = {}

    def brackets(x, p):
        # T ::= [u] | [T] | [T u], u a nonempty run
        key = (x, p)
        if key in memo:
            return memo[key]
        out = []
        if p >= 1:
            inner_budget = (x, p - 1)
            for u in bd.runs(*inner_budget, nonempty=True):
                out.append(Word((Bracket(u),)))
            for t in brackets(*inner_budget):
                out.append(Word((Bracket(t),)))
                for u in bd.runs(*_sub(inner_budget, t), nonempty=True):
                    out.append(Word((Bracket(t * u),)))
        memo[key] = out
        return out

    def words(x, p):
        out = list(bd.runs(x, p, nonempty=True))
        if unital:
            out.append(Word())
        for t in brackets(x, p):
            for u in bd.runs(*_sub((x, p), t), nonempty=False):
                out.append(t * u)
        return out

    return words


def _right_nested(bd):
    memo = {}

    def brackets(x, p):
        # S ::= [u] | [S] | [u S]
        key = (x, p)
        if key in memo:
            return memo[key]
        out = []
        if p >= 1:
            inner_budget = (x, p - 1)
            for u in bd.runs(*inner_budget, nonempty=True):
                out.append(Word((Bracket(u),)))
                for s in brackets(*_sub(inner_budget, u)):
                    out.append(Word((Bracket(u * s),)))
            for s in brackets(*inner_budget):
                out.append(Word((Bracket(s),)))
        memo[key] = out
        return out

    def words(x, p):
        out = list(bd.runs(x, p, nonempty=True))
        for u in bd.runs(x, p, nonempty=False):
            for s in brackets(*_sub((x, p), u)):
                out.append(u * s)
        return out

    return words


def _unit_insert(bd):
    def words(x, p):
        return list(bd.runs(x, p, nonempty=False, dagger=True))
    return words


def _phi4(bd):
    removed = set()
    for g in linear_parts_basis(bd.p.relations, bd.p.alphabet):
        w, _ = bd.p.dlex.leading(g)
        removed.add(w[0])
    vs = tuple(a for a in bd.letters if a not in removed)

    def towers(x, p):
        # [v]^(k) for a letter v
        out = []
        for v in vs:
            if x >= 1:
                w = Word((v,))
                for _ in range(p):
                    w = Word((Bracket(w),))
                    out.append(w)
        return out

    memo = {}

    def tails(x, p):
        # sequences  T_1 u_1 ... T_r u_r  with r >= 1, u_i possibly empty
        key = (x, p)
        if key in memo:
            return memo[key]
        out = []
        for t in towers(x, p):
            rest = _sub((x, p), t)
            for u in bd.runs(*rest, nonempty=False):
                out.append(t * u)
                for tail in tails(*_sub(rest, u)):
                    out.append(t * u * tail)
        memo[key] = out
        return out

    def words(x, p):
        out = list(bd.runs(x, p, nonempty=True))
        for u0 in bd.runs(x, p, nonempty=False):
            for t in tails(*_sub((x, p), u0)):
                out.append(u0 * t)
        return out

    return words


def enumerate_basis(family, p, bound):
    """Words of the predicted basis with grade within ``bound``."""
    if isinstance(family, str):
        family = BasisFamily.named(family, p)
    bd = _Builder(p, family, bound)
    s = family.shape
    if s == "rb":
        fn = _rb(bd, p.unital)
    elif s == "nested_left":
        fn = _nested_left(bd, p.unital)
    elif s == "right_nested":
        fn = _right_nested(bd)
    elif s == "unit_insert":
        fn = _unit_insert(bd)
    elif s == "phi4":
        fn = _phi4(bd)
    elif s == "base":
        def fn(x, q):
            return bd.runs(x, 0, nonempty=not p.unital, dagger=False)
    elif s == "empty":
        def fn(x, q):
            return []
    else:
        raise ValueError("unknown shape %r" % s)
    words = fn(*bound)
    out = sorted(set(words), key=lambda w: (grade(w), str(w)))
    if len(out) != len(words):
        raise AssertionError("shape %s produced a word twice" % s)
    return out


# independent dimension count -----------------------------------------------------

def _designated(s):
    # a fixed monomial of largest total grade; no monomial order involved
    return max(s.support(), key=lambda w: (sum(grade(w)), grade(w), str(w)))


def _dominates(s):
    gs = [grade(w) for w in s.support()]
    top = (max(g[0] for g in gs), max(g[1] for g in gs))
    return top in gs


def _multilinear(opi):
    for w in opi.pattern.support():
        letters = []
        _collect(w, letters)
        if sorted(letters) != sorted(opi.variables):
            return False
    return True


def _collect(w, out):
    for f in w:
        if isinstance(f, Bracket):
            _collect(f.inner, out)
        else:
            out.append(f)


def bounded_instances(opis, alphabet, bound, unital, relations=()):
    """Instances of the OPIs, and the relations, with every monomial in the box."""
    words = words_in_box(alphabet, bound[0], bound[1], unital=unital)
    grades = [grade(w) for w in words]
    out = []
    seen = set()
    for opi in opis:
        if not _multilinear(opi):
            raise ClosureError("%s has a monomial that does not use each variable once" % opi)
        for idx in product(range(len(words)), repeat=opi.arity):
            if sum(grades[i][0] for i in idx) > bound[0] or sum(grades[i][1] for i in idx) > bound[1]:
                continue
            s = instantiate(opi, [words[i] for i in idx])
            if s and s not in seen:
                seen.add(s)
                out.append(s)
    out.extend(g for g in relations if g and g not in seen)
    bad = [s for s in out if not _dominates(s)]
    if bad:
        raise ClosureError("no monomial of %s dominates the others in grade" % bad[0])
    return [s for s in out if _within_all(s, bound)]


def _within_all(s, bound):
    return all(grade(w)[0] <= bound[0] and grade(w)[1] <= bound[1] for w in s.support())


def ideal_rows(polys, alphabet, bound, unital):
    """Rows ``q|s`` with all monomials in the box, over columns indexed by words."""
    words = words_in_box(alphabet, bound[0], bound[1], unital=unital)
    col = {w: i for i, w in enumerate(words)}
    index = {}
    for s in polys:
        index.setdefault(_designated(s), []).append(s)
    rows = {}
    for w in words:
        for path, fs, _ in levels(w):
            n = len(fs)
            spans = [(i, j) for i in range(n) for j in range(i + 1, n + 1)]
            if unital:
                spans += [(i, i) for i in range(n + 1)]
            for i, j in spans:
                m = Word(fs[i:j])
                hits = index.get(m)
                if not hits:
                    continue
                q = None
                for s in hits:
                    if q is None:
                        q = star_word_at(w, path, i, j)
                    r = apply_star(q, s)
                    vec = {}
                    ok = True
                    for u, c in r.items():
                        k = col.get(u)
                        if k is None:
                            ok = False
                            break
                        vec[k] = c
                    if ok and vec:
                        rows[frozenset(vec.items())] = vec
    return words, list(rows.values())


def _cell_counts(words, rows, bound):
    grades = [grade(w) for w in words]
    row_top = []
    for r in rows:
        gx = max(grades[k][0] for k in r)
        gp = max(grades[k][1] for k in r)
        row_top.append((gx, gp))
    cum = {}
    for i in range(bound[0] + 1):
        for j in range(bound[1] + 1):
            e = Echelon()
            for r, (gx, gp) in zip(rows, row_top):
                if gx <= i and gp <= j:
                    e.add(r)
            n = sum(1 for g in grades if g[0] <= i and g[1] <= j)
            cum[(i, j)] = n - e.rank
    cells = {}
    for (i, j), v in cum.items():
        cells[(i, j)] = v - cum.get((i - 1, j), 0) - cum.get((i, j - 1), 0) + cum.get((i - 1, j - 1), 0)
    return cells, cum


def quotient_dim_oracle(p, bound, drop_extra=False):
    """Dimensions of the quotient per grade cell ``(deg_X, deg_P)``.

    Computed as ``|words in box| - rank(bounded ideal rows)`` with exact
    arithmetic and inclusion-exclusion over the sub-boxes.
    """
    extra = [] if drop_extra else extra_relations(p)
    opis = [p.opi] if p.opi is not None else []
    polys = bounded_instances(opis, p.alphabet, bound, p.unital, list(p.relations) + extra)
    words, rows = ideal_rows(polys, p.alphabet, bound, p.unital)
    cells, _ = _cell_counts(words, rows, bound)
    return cells


def irr_cells(words, bound):
    cells = {(i, j): 0 for i in range(bound[0] + 1) for j in range(bound[1] + 1)}
    for w in words:
        cells[grade(w)] += 1
    return cells


# equivalence of OPI families ------------------------------------------------------

EQUAL = "Equal"
LEFT_IN_RIGHT = "LeftInRight"
RIGHT_IN_LEFT = "RightInLeft"
INCOMPARABLE = "Incomparable"


def check_equivalence(left, right, alphabet, bound):
    """Compare the bounded spans of the operated ideals generated by two OPI lists."""
    left = [left] if isinstance(left, Opi) else list(left)
    right = [right] if isinstance(right, Opi) else list(right)
    unital = {o.unital for o in left + right}
    if len(unital) != 1:
        raise OpiError("cannot compare unital and nonunital OPIs")
    unital = unital.pop()
    alphabet = Alphabet.coerce(alphabet)
    _, ra = ideal_rows(bounded_instances(left, alphabet, bound, unital), alphabet, bound, unital)
    _, rb = ideal_rows(bounded_instances(right, alphabet, bound, unital), alphabet, bound, unital)
    ea, eb = Echelon(), Echelon()
    for r in ra:
        ea.add(r)
    for r in rb:
        eb.add(r)
    a_in_b = all(eb.contains(r) for r in ra)
    b_in_a = all(ea.contains(r) for r in rb)
    if a_in_b and b_in_a:
        return EQUAL
    if a_in_b:
        return LEFT_IN_RIGHT
    if b_in_a:
        return RIGHT_IN_LEFT
    return INCOMPARABLE


def compare_shape(p, bound, family="auto"):
    """Per-cell counts from the shape, from irreducible words and from the oracle."""
    from .gs import irreducibles
    gs, _ = build_generating_set(p)
    shape = irr_cells(enumerate_basis(family, p, bound), bound)
    irr = irr_cells(irreducibles(gs, bound), bound)
    oracle = quotient_dim_oracle(p, bound)
    return shape, irr, oracle
