"""Term rewriting induced by an OPI, relations of a base algebra and extra rules.

A rule has a pattern word ``lhs`` with variable letters.  A redex in a word
``w`` is a run of factors at some bracket level matching ``lhs``, such that
the corresponding instance really has the matched subword as its leading
monomial.  Rewriting replaces ``q|s_bar`` by ``q|(s_bar - s)`` with ``s``
the monic instance and ``q`` the surrounding star word.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product

from .opi import instantiate, substitute_poly, substitute_vars
from .orders import MonomialOrder, monicize
from .poly import OpPoly, apply_star
from .words import ONE, Bracket, Word, levels, star_word_at, words_in_box


class NoRedex(Exception):
    """Raised when a polynomial is already in normal form."""


class BudgetExceeded(RuntimeError):
    pass


class UnstableLeading(ValueError):
    """The leading monomial of an OPI's instances is not a fixed pattern."""


@dataclass(frozen=True)
class Rule:
    lhs: Word
    poly: OpPoly
    variables: tuple
    source: str

    def instance(self, binding, order):
        """The monic instance at ``binding`` if its leading word is the match, else None."""
        if self.variables:
            s = substitute_poly(self.poly, binding)
            target = substitute_vars(self.lhs, binding)
        else:
            s = self.poly
            target = self.lhs
        if not s:
            return None
        w, c = order.leading(s)
        if w != target:
            return None
        return s if c == 1 else s.scale(1 / c)

    def __str__(self):
        return "%s: %s" % (self.source, self.lhs)


@dataclass(frozen=True)
class Redex:
    path: tuple
    start: int
    end: int
    rule: Rule
    binding: tuple
    instance: OpPoly
    word: Word

    @property
    def star_word(self):
        return star_word_at(self.word, self.path, self.start, self.end)

    @property
    def replacement(self):
        """The polynomial that the word rewrites to."""
        return OpPoly.word(self.word) - apply_star(self.star_word, self.instance)

    def strategy_key(self):
        # innermost, then leftmost, then shortest
        return (-len(self.path), self.path, self.start, self.end - self.start)


@dataclass(frozen=True)
class Joinability:
    verdict: str          # "yes", "no" or "unknown"
    witness: OpPoly = None

    def __bool__(self):
        return self.verdict == "yes"


def _match(pat, fs, variables, binding):
    """Yield bindings matching the factor sequence ``pat`` against ``fs`` exactly."""
    if not pat:
        if not fs:
            yield binding
        return
    if len(fs) < len(pat):
        return
    head = pat[0]
    if isinstance(head, Bracket):
        f = fs[0]
        if isinstance(f, Bracket):
            for b in _match(head.inner, f.inner, variables, binding):
                yield from _match(pat[1:], fs[1:], variables, b)
        return
    if head in variables:
        if head in binding:
            val = binding[head]
            n = len(val)
            if tuple(fs[:n]) == tuple(val):
                yield from _match(pat[1:], fs[n:], variables, binding)
            return
        rest = len(pat) - 1
        for k in range(1, len(fs) - rest + 1):
            b = dict(binding)
            b[head] = Word(fs[:k])
            yield from _match(pat[1:], fs[k:], variables, b)
        return
    if fs[0] == head:
        yield from _match(pat[1:], fs[1:], variables, binding)


def _sample_args(alphabet):
    letters = tuple(alphabet)[:2]
    return [w for w in words_in_box(letters, 2, 1, unital=False)]


def opi_rules(opi, order):
    """Rules for every way of setting variables of a unital OPI to 1.

    The leading pattern of each case is detected on sample arguments and
    must be the same for every sample.
    """
    samples = _sample_args(order.alphabet)
    free_sets = [()]
    if opi.unital:
        free_sets = [c for r in range(opi.arity + 1) for c in combinations(opi.variables, r)]
    rules = []
    for ones in free_sets:
        binding1 = {v: ONE for v in ones}
        case = substitute_poly(opi.pattern, binding1)
        if not case:
            continue
        free = tuple(v for v in opi.variables if v not in ones)
        lhs = _detect_lead(case, free, order, samples)
        if lhs is None:
            raise UnstableLeading("%s with %s: no single pattern is leading for all arguments under %s"
                                  % (opi, ", ".join("%s=1" % v for v in ones) or "no unit arguments",
                                     order.kind.value))
        if not ones and opi.entry.lead is not None:
            from .text import parse_word
            declared = parse_word(opi.entry.lead)
            if declared != lhs:
                raise UnstableLeading("%s: detected leading pattern %s, expected %s" % (opi, lhs, declared))
        src = opi.tag if not ones else "%s[%s]" % (opi.tag, ",".join("%s=1" % v for v in ones))
        rules.append(Rule(lhs, case, free, src))
    return rules


def _detect_lead(case, free, order, samples):
    candidates = list(case.support())
    if not free:
        w, _ = order.leading(case)
        return w
    for args in product(samples, repeat=len(free)):
        b = dict(zip(free, args))
        s = substitute_poly(case, b)
        if not s:
            continue
        lead, _ = order.leading(s)
        candidates = [m for m in candidates if substitute_vars(m, b) == lead]
        if not candidates:
            return None
    if len(candidates) > 1:
        # distinct pattern monomials that always coincide; pick the first deterministically
        candidates.sort(key=str)
    return candidates[0]


def fixed_rule(f, order, source):
    f = monicize(f, order)
    w, _ = order.leading(f)
    return Rule(w, f, (), source)


class RewriteSystem:
    """Rules plus an order; provides one-step rewriting and normal forms."""

    def __init__(self, rules, order):
        if not isinstance(order, MonomialOrder):
            raise TypeError("expected a MonomialOrder")
        self.rules = list(rules)
        self.order = order
        self._redex_cache = {}

    @classmethod
    def from_opi(cls, opi, order, relations=(), extra=()):
        rules = opi_rules(opi, order) if opi is not None else []
        rules += [fixed_rule(g, order, "G") for g in relations if g]
        rules += [fixed_rule(g, order, "extra") for g in extra if g]
        return cls(rules, order)

    def with_rules(self, extra, source="extra"):
        return RewriteSystem(self.rules + [fixed_rule(g, self.order, source) for g in extra if g], self.order)

    # redex search -------------------------------------------------------

    def redexes(self, w):
        """All redexes of the word ``w``, in strategy order."""
        hit = self._redex_cache.get(w)
        if hit is not None:
            return hit
        out = []
        for path, fs, _ in levels(w):
            n = len(fs)
            for rule in self.rules:
                lhs = rule.lhs
                if not lhs:
                    # an empty pattern matches at every empty run
                    for i in range(n + 1):
                        s = rule.instance({}, self.order)
                        if s is not None:
                            out.append(Redex(path, i, i, rule, (), s, w))
                    continue
                m = len(lhs)
                fixed_len = not rule.variables
                for i in range(n - m + 1):
                    first = lhs[0]
                    if first not in rule.variables and not isinstance(first, Bracket) and fs[i] != first:
                        continue
                    ends = (i + m,) if fixed_len else range(i + m, n + 1)
                    for j in ends:
                        for b in _match(lhs, fs[i:j], rule.variables, {}):
                            s = rule.instance(b, self.order)
                            if s is not None:
                                out.append(Redex(path, i, j, rule, tuple(sorted(b.items())), s, w))
        out.sort(key=Redex.strategy_key)
        if len(self._redex_cache) > 400000:
            self._redex_cache.clear()
        self._redex_cache[w] = out
        return out

    def first_redex(self, w):
        r = self.redexes(w)
        return r[0] if r else None

    def is_irreducible(self, w):
        return not self.redexes(w)

    # rewriting ------------------------------------------------------------

    def rewrite_once(self, f):
        """Rewrite the largest reducible monomial of ``f`` once."""
        for w, c in f.sorted_terms(key=self.order.key):
            r = self.first_redex(w)
            if r is not None:
                return f - OpPoly.word(w, c) + r.replacement.scale(c)
        raise NoRedex(str(f))

    def normal_form(self, f, budget=10000, trace=None):
        """Rewrite until no redex is left, always taking the largest reducible monomial.

        ``trace``, if a list, receives ``(word, replacement)`` per step.
        """
        key = self.order.key
        work = dict(f.items())
        out = {}
        steps = 0
        while work:
            m = max(work, key=key)
            c = work.pop(m)
            r = self.first_redex(m)
            if r is None:
                out[m] = c
                continue
            steps += 1
            if steps > budget:
                raise BudgetExceeded("normal form did not finish within %d steps" % budget)
            rep = r.replacement
            if trace is not None:
                trace.append((m, rep))
            for w, d in rep.items():
                v = work.get(w, 0) + c * d
                if v:
                    work[w] = v
                else:
                    work.pop(w, None)
        return OpPoly(out)

    reduce = normal_form

    def successors(self, f):
        """Every polynomial reachable from ``f`` by one rewriting step."""
        out = []
        for w, c in f.items():
            for r in self.redexes(w):
                out.append(f - OpPoly.word(w, c) + r.replacement.scale(c))
        return out

    def _explore(self, f, budget):
        seen = {f}
        queue = deque([f])
        closed = True
        while queue:
            p = queue.popleft()
            for s in self.successors(p):
                if s not in seen:
                    if len(seen) >= budget:
                        closed = False
                        break
                    seen.add(s)
                    queue.append(s)
        return seen, closed

    def joinable(self, f, g, budget=2000):
        a = self.normal_form(f)
        b = self.normal_form(g)
        if a == b:
            return Joinability("yes", a)
        fa, ca = self._explore(f, budget)
        fb, cb = self._explore(g, budget)
        common = fa & fb
        if common:
            return Joinability("yes", min(common, key=len))
        if ca and cb:
            return Joinability("no")
        return Joinability("unknown")

    def reaches(self, f, target, budget=5000):
        """Whether ``target`` is reachable from ``f`` by rewriting steps."""
        if f == target:
            return True
        seen = {f}
        queue = deque([f])
        while queue and len(seen) < budget:
            p = queue.popleft()
            for s in self.successors(p):
                if s == target:
                    return True
                if s not in seen:
                    seen.add(s)
                    queue.append(s)
        return False


def rewriting_system(opi, order, relations=(), extra=()):
    return RewriteSystem.from_opi(opi, order, relations, extra)


def check_instance(opi, args, order):
    """The monic instance at ``args`` with its leading word."""
    s = instantiate(opi, args)
    if not s:
        return None, None
    s = monicize(s, order)
    return s, order.leading(s)[0]
