"""Parsing words and polynomials from text.

Grammar::

    word   := "1" | factor+
    factor := letter | "[" word "]" | "@"
    poly   := term (("+" | "-") term)*
    term   := [rational "*"] word | rational
    rational := ["-"] int ["/" int]

Factors are separated by whitespace.  A run of letters such as ``ab`` is
split into single letters unless the alphabet contains the whole run.
"""

import re
from fractions import Fraction

from .poly import OpPoly
from .words import STAR, Alphabet, Bracket, StarWord, Word, count_stars

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[\[\]@+\-*/]))")


class ParseError(ValueError):
    def __init__(self, msg, text, pos):
        self.text = text
        self.pos = pos
        super().__init__("%s at position %d\n  %s\n  %s^" % (msg, pos, text, " " * pos))


def _tokenize(text):
    toks = []
    i = 0
    n = len(text)
    while True:
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            break
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            raise ParseError("unexpected character %r" % text[i], text, i)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        i = m.end()
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text, alphabet=None, allow_star=False):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet
        self.allow_star = allow_star

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def split_letters(self, name, pos):
        al = self.alphabet
        if al is not None:
            if name in al:
                return [name]
            parts = list(name)
            for j, ch in enumerate(parts):
                if ch not in al:
                    raise ParseError("letter %r is not in the alphabet" % ch, self.text, pos + j)
            return parts
        if name.isalpha():
            return list(name)
        return [name]

    def starts_factor(self):
        kind, val, _ = self.peek()
        return kind == "id" or (kind == "op" and val in "[@")

    def word(self):
        kind, val, pos = self.peek()
        if kind == "int":
            if val != "1":
                self.error("expected a word")
            self.take()
            return Word()
        fs = []
        while self.starts_factor():
            kind, val, pos = self.take()
            if kind == "id":
                fs.extend(self.split_letters(val, pos))
            elif val == "@":
                if not self.allow_star:
                    raise ParseError("the star is not allowed here", self.text, pos)
                fs.append(STAR)
            else:
                inner = self.word()
                k2, v2, _ = self.peek()
                if v2 != "]" or k2 != "op":
                    self.error("expected ']'")
                self.take()
                fs.append(Bracket(inner))
        if not fs:
            self.error("expected a word")
        return Word(fs)

    def rational(self):
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError("expected an integer", self.text, pos)
        num = int(val)
        if self.peek()[1] == "/" and self.peek()[0] == "op":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("expected a denominator", self.text, pos)
            if int(val) == 0:
                raise ParseError("zero denominator", self.text, pos)
            return Fraction(num, int(val))
        return Fraction(num)

    def term(self):
        kind, val, pos = self.peek()
        if kind == "op" and val == "-" and self.peek(1)[0] == "int":
            # a signed coefficient, as in "a - -2*b"
            self.take()
            c, w = self.term()
            return -c, w
        if kind == "int":
            nxt = self.peek(1)
            bare_one = val == "1" and not (nxt[0] == "op" and nxt[1] in "*/")
            if bare_one:
                self.take()
                if self.starts_factor():
                    self.error("'1' cannot be juxtaposed with other factors")
                return Fraction(1), Word()
            c = self.rational()
            if self.peek()[0] == "op" and self.peek()[1] == "*":
                self.take()
                return c, self.word()
            return c, Word()
        return Fraction(1), self.word()

    def poly(self):
        terms = []
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        while True:
            c, w = self.term()
            terms.append((w, sign * c))
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
                continue
            break
        if self.peek()[0] != "end":
            self.error("unexpected token %r" % self.peek()[1])
        return OpPoly(terms)


def _alpha(alphabet):
    if alphabet is None:
        return None
    return Alphabet.coerce(alphabet)


def parse_word(text, alphabet=None):
    p = _Parser(text, _alpha(alphabet))
    w = p.word()
    if p.peek()[0] != "end":
        p.error("unexpected token %r" % p.peek()[1])
    return w


def parse_star_word(text, alphabet=None):
    p = _Parser(text, _alpha(alphabet), allow_star=True)
    w = p.word()
    if p.peek()[0] != "end":
        p.error("unexpected token %r" % p.peek()[1])
    if count_stars(w) != 1:
        raise ParseError("a star word needs exactly one '@'", text, 0)
    return StarWord(w)


def parse_poly(text, alphabet=None):
    if text.strip() == "0":
        return OpPoly.zero()
    return _Parser(text, _alpha(alphabet)).poly()
