"""Operated polynomials: finite linear combinations of words over the rationals."""

from fractions import Fraction
from numbers import Rational

from .words import STAR, StarWord, Word, grade, substitute


def as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c.strip())
    raise TypeError("coefficients must be rational, got %r" % (c,))


def structural_key(w):
    """A fixed, order-independent sort key used for printing and storage."""
    return (grade(w), len(w), _skey(w))


def _skey(w):
    return tuple((1, _skey(f.inner)) if isinstance(f, tuple) else (0, f) for f in w)


class OpPoly:
    """An immutable sparse polynomial ``{word: coefficient}`` with no zero terms."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        d = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                if not isinstance(w, Word):
                    raise TypeError("expected Word keys, got %r" % (w,))
                c = as_fraction(c)
                if c:
                    c = d.get(w, 0) + c
                    if c:
                        d[w] = c
                    else:
                        d.pop(w, None)
        self._terms = d
        self._hash = None

    @classmethod
    def _raw(cls, d):
        p = cls.__new__(cls)
        p._terms = d
        p._hash = None
        return p

    @classmethod
    def word(cls, w, c=1):
        return cls({w: c})

    @classmethod
    def constant(cls, c):
        return cls({Word(): c})

    @classmethod
    def zero(cls):
        return cls._raw({})

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def coeff(self, w):
        return self._terms.get(w, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def is_zero(self):
        return not self._terms

    def is_scalar(self):
        return all(not w for w in self._terms)

    def __eq__(self, other):
        if isinstance(other, OpPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == OpPoly.constant(other)
        if isinstance(other, Word):
            return self._terms == {other: 1}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, OpPoly):
            return other
        if isinstance(other, Word):
            return OpPoly.word(other)
        if isinstance(other, (int, Fraction, str)):
            return OpPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = dict(self._terms)
        for w, c in other._terms.items():
            c = d.get(w, 0) + c
            if c:
                d[w] = c
            else:
                del d[w]
        return OpPoly._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return OpPoly._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = as_fraction(c)
        if not c:
            return OpPoly.zero()
        return OpPoly._raw({w: c * v for w, v in self._terms.items()})

    def __mul__(self, other):
        """Scalar multiple, or concatenation product with a word or polynomial."""
        if isinstance(other, (int, Fraction, str)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u * v
                c = d.get(w, 0) + a * b
                if c:
                    d[w] = c
                else:
                    d.pop(w, None)
        return OpPoly._raw(d)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, str)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def bracket(self):
        """Apply the operator linearly: ``[sum c_i w_i] = sum c_i [w_i]``."""
        from .words import bracket
        return OpPoly._raw({bracket(w): c for w, c in self._terms.items()})

    def map_words(self, fn):
        return OpPoly((fn(w), c) for w, c in self._terms.items())

    def sorted_terms(self, key=None, reverse=True):
        key = key or structural_key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=reverse)

    def format(self, order=None):
        return format_poly(self, order)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "OpPoly(%r)" % format_poly(self)

    def max_grade(self):
        xs = [grade(w) for w in self._terms]
        return (max(g[0] for g in xs), max(g[1] for g in xs)) if xs else (0, 0)


def apply_star(q, s):
    """Substitute the polynomial ``s`` for the star of ``q``, linearly."""
    if not isinstance(q, StarWord):
        q = StarWord(q)
    if isinstance(s, Word):
        return OpPoly.word(substitute(q, s))
    return OpPoly._raw({substitute(q, w): c for w, c in s.items()})


def _fmt_coeff(c):
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def format_poly(f, order=None):
    """Text form, highest term first; parses back to the same polynomial."""
    if not f:
        return "0"
    key = order.key if order is not None else structural_key
    parts = []
    for i, (w, c) in enumerate(f.sorted_terms(key=key)):
        neg = c < 0
        a = -c if neg else c
        body = str(w)
        if not w:
            term = _fmt_coeff(a)
        elif a == 1:
            term = body
        else:
            term = _fmt_coeff(a) + "*" + body
        if i == 0:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts)


__all__ = ["OpPoly", "apply_star", "format_poly", "as_fraction", "structural_key", "STAR"]
