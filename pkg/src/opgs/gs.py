"""Compositions and bounded Gröbner-Shirshov verification.

The generating set is ``S`` (all instances of an OPI) together with the
relations ``G`` of a base algebra and optional extra polynomials.  It is a
Gröbner-Shirshov basis when every composition of two of its elements
reduces to zero.  Verification is bounded: only elements whose leading word
lies in a grading box are paired.
"""

import json
from dataclasses import dataclass, field
from itertools import product

from .opi import instantiate
from .orders import MonomialOrder
from .poly import OpPoly, apply_star
from .rewrite import RewriteSystem
from .words import STAR_WORD, Alphabet, StarWord, Word, find_occurrences, grade, star_word_at, words_in_box


@dataclass(frozen=True)
class Generator:
    poly: OpPoly
    lead: Word
    label: str


@dataclass(frozen=True)
class Composition:
    kind: str             # "intersection" or "inclusion"
    f: OpPoly
    g: OpPoly
    w: Word
    value: OpPoly
    u: Word = None        # intersection: w = f_bar u = v g_bar
    v: Word = None
    q: StarWord = None    # inclusion: w = f_bar = q|g_bar


@dataclass(frozen=True)
class Triviality:
    trivial: bool
    remainder: OpPoly

    def __bool__(self):
        return self.trivial


@dataclass(frozen=True)
class CompositionResult:
    kind: str
    f: str
    g: str
    w: Word
    trivial: bool
    remainder: OpPoly

    def record(self):
        return {"pair": [self.f, self.g], "kind": self.kind, "w": str(self.w),
                "verdict": "trivial" if self.trivial else "nontrivial",
                "remainder": str(self.remainder)}


@dataclass
class GSReport:
    bound: tuple
    generators: int
    results: list = field(default_factory=list)
    unstable: list = field(default_factory=list)
    skipped: int = 0
    out_of_order: list = field(default_factory=list)

    @property
    def failures(self):
        return [r for r in self.results if not r.trivial]

    @property
    def ok(self):
        return not self.failures and not self.unstable and not self.out_of_order

    def counts(self):
        c = {"intersection": 0, "inclusion": 0}
        for r in self.results:
            c[r.kind] += 1
        return c

    def summary(self):
        c = self.counts()
        lines = ["bound %d,%d: %d generators, %d intersection and %d inclusion compositions"
                 % (self.bound[0], self.bound[1], self.generators, c["intersection"], c["inclusion"])]
        lines.append("trivial: %d/%d, skipped beyond cap: %d, unstable leading words: %d"
                     % (len(self.results) - len(self.failures), len(self.results), self.skipped, len(self.unstable)))
        for r in self.failures[:10]:
            lines.append("  nontrivial %s of %s and %s at %s; remainder %s" % (r.kind, r.f, r.g, r.w, r.remainder))
        for u in self.unstable[:10]:
            lines.append("  unstable: %s" % u)
        lines.append("verdict: %s" % ("Groebner-Shirshov up to the bound" if self.ok else "NOT a Groebner-Shirshov basis"))
        return "\n".join(lines)

    def jsonl(self):
        return "\n".join(json.dumps(r.record(), sort_keys=True) for r in self.results)


class GeneratorSet:
    """``S`` of an OPI over an alphabet, plus base relations and extras."""

    def __init__(self, opi, alphabet, order, relations=(), extra=(), unital=None):
        self.opi = opi
        self.alphabet = Alphabet.coerce(alphabet)
        if not isinstance(order, MonomialOrder):
            order = MonomialOrder(order, self.alphabet)
        self.order = order
        self.unital = opi.unital if opi is not None and unital is None else bool(unital)
        self.relations = tuple(self._monic(g) for g in relations if g)
        self.extra = tuple(self._monic(g) for g in extra if g)
        self.system = RewriteSystem.from_opi(opi, order, self.relations, self.extra)

    def _monic(self, f):
        _, c = self.order.leading(f)
        return f if c == 1 else f.scale(1 / c)

    def without_extra(self):
        return GeneratorSet(self.opi, self.alphabet, self.order, self.relations, (), self.unital)

    def _case_rules(self):
        rules = {}
        for r in self.system.rules:
            if r.source == "G" or r.source == "extra":
                continue
            rules[frozenset(set(self.opi.variables) - set(r.variables))] = r
        return rules

    def instances(self, bound):
        """Monic generators whose leading word lies within ``bound``.

        Also returns leading-stability violations found on the way.
        """
        gens = []
        unstable = []
        seen = set()
        o = self.order
        if self.opi is not None:
            cases = self._case_rules()
            words = words_in_box(self.alphabet, bound[0], bound[1], unital=self.unital)
            grades = [grade(w) for w in words]
            arity = self.opi.arity
            for idx in product(range(len(words)), repeat=arity):
                gx = sum(grades[i][0] for i in idx)
                gp = sum(grades[i][1] for i in idx)
                if gx > bound[0] or gp > bound[1]:
                    continue
                args = tuple(words[i] for i in idx)
                s = instantiate(self.opi, args)
                if not s:
                    continue
                lead, c = o.leading(s)
                if not _within(lead, bound):
                    continue
                s = s if c == 1 else s.scale(1 / c)
                ones = frozenset(v for v, a in zip(self.opi.variables, args) if not a)
                rule = cases.get(ones)
                binding = {v: a for v, a in zip(self.opi.variables, args) if a}
                if rule is None or rule.instance(binding, o) is None:
                    unstable.append("%s%s has leading word %s" % (self.opi.tag, _fmt_args(args), lead))
                if s in seen:
                    continue
                seen.add(s)
                gens.append(Generator(s, lead, "%s%s" % (self.opi.tag, _fmt_args(args))))
        for name, polys in (("G", self.relations), ("extra", self.extra)):
            for g in polys:
                lead, _ = o.leading(g)
                if _within(lead, bound) and g not in seen:
                    seen.add(g)
                    gens.append(Generator(g, lead, "%s:%s" % (name, g.format(o))))
        return gens, unstable


def _fmt_args(args):
    return "(" + ", ".join(str(a) for a in args) + ")"


def _within(w, bound):
    x, p = grade(w)
    return x <= bound[0] and p <= bound[1]


def intersections(f, g, order):
    """Intersection compositions ``f u - v g`` with ``f_bar u = v g_bar``."""
    fw, _ = order.leading(f)
    gw, _ = order.leading(g)
    out = []
    for k in range(1, min(len(fw), len(gw))):
        if fw[len(fw) - k:] == gw[:k]:
            u = Word(gw[k:])
            v = Word(fw[:len(fw) - k])
            w = fw * u
            out.append(Composition("intersection", f, g, w, f * u - v * g, u=u, v=v))
    return out


def inclusions(f, g, order):
    """Inclusion compositions ``f - q|g`` with ``f_bar = q|g_bar``."""
    fw, _ = order.leading(f)
    gw, _ = order.leading(g)
    if not gw:
        return []
    out = []
    for q in find_occurrences(fw, gw):
        if q == STAR_WORD and f == g:
            continue
        out.append(Composition("inclusion", f, g, fw, f - apply_star(q, g), q=q))
    return out


def find_compositions(f, g, order):
    return intersections(f, g, order) + inclusions(f, g, order)


def trivial_modulo(comp, system):
    """Whether a composition reduces to zero; the remainder otherwise."""
    rem = system.normal_form(comp.value)
    return Triviality(not rem, rem)


def verify_gs(genset, bound, cap=None):
    """Check every composition among generators with leading word in ``bound``.

    Inclusions are found from the redexes of each leading word, so the
    inner element ranges over all of ``S``.  Compositions whose word is
    beyond ``cap`` (twice the bound by default) are counted as skipped.
    """
    bound = tuple(bound)
    cap = cap or (2 * bound[0], 2 * bound[1])
    gens, unstable = genset.instances(bound)
    system = genset.system
    order = genset.order
    key = order.key
    report = GSReport(bound, len(gens), unstable=unstable)
    labels = {g.poly: g.label for g in gens}

    index = {}
    for g in gens:
        for k in range(1, len(g.lead)):
            index.setdefault(Word(g.lead[:k]), []).append(g)

    def check(kind, f, glabel, w, value):
        if not _within(w, cap):
            report.skipped += 1
            return
        kw = key(w)
        if any(key(m) >= kw for m in value.support()):
            report.out_of_order.append("%s of %s and %s at %s" % (kind, f.label, glabel, w))
        rem = system.normal_form(value)
        report.results.append(CompositionResult(kind, f.label, glabel, w, not rem, rem))

    for f in gens:
        fw = f.lead
        for r in system.redexes(fw):
            q = r.star_word
            if q == STAR_WORD and r.instance == f.poly:
                continue
            glabel = labels.get(r.instance) or _redex_label(r)
            check("inclusion", f, glabel, fw, f.poly - apply_star(q, r.instance))
        n = len(fw)
        for k in range(1, n):
            for g in index.get(Word(fw[n - k:]), ()):
                if k >= len(g.lead):
                    continue
                u = Word(g.lead[k:])
                v = Word(fw[:n - k])
                check("intersection", f, g.label, fw * u, f.poly * u - v * g.poly)
    return report


def _redex_label(r):
    if r.rule.variables:
        return "%s(%s)" % (r.rule.source, ", ".join("%s=%s" % (k, v) for k, v in r.binding))
    return "%s:%s" % (r.rule.source, r.instance)


def irreducibles(genset, bound):
    """Words within ``bound`` containing no leading word of a generator."""
    words = words_in_box(genset.alphabet, bound[0], bound[1], unital=genset.unital)
    return [w for w in words if genset.system.is_irreducible(w)]


__all__ = ["Generator", "Composition", "Triviality", "CompositionResult", "GSReport", "GeneratorSet",
           "intersections", "inclusions", "find_compositions", "trivial_modulo", "verify_gs",
           "irreducibles", "star_word_at"]
