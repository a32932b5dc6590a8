"""Monomial orders on bracketed words.

Every order is realised as a sort key: ``u < v`` iff ``key(u) < key(v)``.
Keys are nested tuples, so comparisons are cheap and keys are cached.
A bracket around the empty word is keyed as a letter ranked below all
letters, so the orders also make sense on words containing ``[1]``.
"""

from enum import Enum, IntEnum
from functools import lru_cache

from .words import Alphabet, Bracket, STAR, Word, deg_g, deg_p, deg_x, is_dagger

DAGGER_RANK = -1


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class OrderKind(str, Enum):
    DLEX = "dlex"          # degree lex on bracket-free words
    REC_DLEX = "Dlex"      # recursive lex, not a well order
    DL = "dl"
    DL2 = "dl2"            # dl with half brackets scored from the right
    DB = "db"
    UDL = "udl"            # dl plus the unit as least element

    @classmethod
    def parse(cls, s):
        if isinstance(s, cls):
            return s
        for k in cls:
            if k.value == s:
                return k
        aliases = {"dl'": cls.DL2, "dlprime": cls.DL2, "rdlex": cls.REC_DLEX}
        if s in aliases:
            return aliases[s]
        raise ValueError("unknown order %r (choose from %s)" % (s, ", ".join(k.value for k in cls)))


class DomainError(ValueError):
    pass


class MonomialOrder:
    """A total order on words over an alphabet, given by :meth:`key`."""

    def __init__(self, kind, alphabet):
        self.kind = OrderKind.parse(kind)
        self.alphabet = Alphabet.coerce(alphabet)
        rank = self.alphabet.rank
        self._rank = rank
        self.key = lru_cache(maxsize=1 << 18)(self._build_key())

    def __repr__(self):
        return "MonomialOrder(%s, %r)" % (self.kind.value, self.alphabet)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.alphabet) == (other.kind, other.alphabet)

    def __hash__(self):
        return hash((self.kind, self.alphabet))

    def _letter_rank(self, f):
        try:
            return self._rank[f]
        except KeyError:
            raise DomainError("letter %r not in %r" % (f, self.alphabet)) from None

    def _build_key(self):
        kind = self.kind
        rank = self._letter_rank

        def dlex(u):
            out = []
            for f in u:
                if isinstance(f, Bracket):
                    if f.inner:
                        raise DomainError("dlex is defined on bracket-free words only")
                    out.append(DAGGER_RANK)
                elif f == STAR:
                    raise DomainError("cannot order a word containing the star")
                else:
                    out.append(rank(f))
            return (len(out), tuple(out))

        def factor_key(f):
            if isinstance(f, Bracket):
                if not f.inner:
                    return (0, DAGGER_RANK)
                return (1, rec(f.inner))
            if f == STAR:
                raise DomainError("cannot order a word containing the star")
            return (0, rank(f))

        def rec(u):
            return (len(u), tuple(factor_key(f) for f in u))

        if kind is OrderKind.DLEX:
            return dlex
        if kind is OrderKind.REC_DLEX:
            return rec
        if kind in (OrderKind.DL, OrderKind.UDL):
            def dl(u):
                if not u:
                    return (-1,)
                return (deg_p(u), deg_x(u), deg_g(u), rec(u))
            return dl
        if kind is OrderKind.DL2:
            def dl2(u):
                if not u:
                    return (-1,)
                return (deg_p(u), deg_x(u), deg_g(u, right=True), rec(u))
            return dl2
        if kind is OrderKind.DB:
            def db(u):
                runs = []
                starred = []
                cur = []
                for f in u:
                    if isinstance(f, Bracket) and f.inner:
                        runs.append(tuple(cur))
                        cur = []
                        starred.append(db(f.inner))
                    else:
                        cur.append(f)
                runs.append(tuple(cur))
                return (deg_p(u), len(starred), tuple(starred), tuple(dlex(r) for r in runs))
            return db
        raise AssertionError(kind)

    def in_domain(self, u, unital=None):
        """Whether ``u`` lies in the domain the order is defined on."""
        if self.kind is OrderKind.DLEX:
            return all(isinstance(f, str) or is_dagger(f) for f in u) and (unital is not False or bool(u))
        if self.kind is OrderKind.UDL or unital:
            return True
        return bool(u) and not _has_dagger(u)

    def cmp(self, u, v):
        for w in (u, v):
            if not isinstance(w, Word):
                raise TypeError("expected a Word, got %r" % (w,))
            if self.kind in (OrderKind.DL, OrderKind.DL2, OrderKind.REC_DLEX) and not self.in_domain(w):
                raise DomainError("%s is defined on nonunit words without [1]; got %s" % (self.kind.value, w))
        a, b = self.key(u), self.key(v)
        return Cmp.LT if a < b else Cmp.GT if a > b else Cmp.EQ

    def lt(self, u, v):
        return self.key(u) < self.key(v)

    def max(self, words):
        return max(words, key=self.key)

    def sorted(self, words, reverse=False):
        return sorted(words, key=self.key, reverse=reverse)

    def leading(self, f):
        """Leading ``(word, coefficient)`` of a polynomial; ``(1, c)`` for scalars."""
        if not f:
            return Word(), 0
        w = max(f.support(), key=self.key)
        return w, f.coeff(w)


def _has_dagger(u):
    for f in u:
        if isinstance(f, Bracket):
            if not f.inner or _has_dagger(f.inner):
                return True
    return False


def leading(f, order):
    return order.leading(f)


def monicize(f, order):
    """Scale ``f`` so that its leading coefficient is 1."""
    if not f:
        raise ValueError("cannot make the zero polynomial monic")
    _, c = order.leading(f)
    return f.scale(1 / c) if c != 1 else f


def descending_chain(u, v, length):
    """The words ``u[v] > [u[v]] > [[u[v]]] > ...``, each wrapping the last.

    Strictly decreasing under the recursive order, which is therefore not
    a well order.
    """
    w = u * Word((Bracket(v),))
    chain = [w]
    for _ in range(length - 1):
        w = Word((Bracket(w),))
        chain.append(w)
    return chain
