"""Bracketed words: the free operated monoid over an alphabet.

A word is an immutable tuple of factors.  A factor is a letter (a ``str``),
a :class:`Bracket` wrapping an inner word, or the placeholder :data:`STAR`.
The empty word is the identity ``1``; ``Bracket(ONE)`` is the word ``[1]``.

Degree functions follow the convention used by the orders: a bracket around
the empty word counts as a letter ``DAGGER`` ranked below every letter.
Bounds on enumeration use :func:`grade`, which counts structurally.
"""

import re
from itertools import product

STAR = "@"
LETTER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Word(tuple):
    """A bracketed word, stored as a tuple of factors."""

    __slots__ = ()

    def __new__(cls, factors=()):
        return tuple.__new__(cls, factors)

    def __mul__(self, other):
        # concatenation, not repetition
        if isinstance(other, Word):
            return Word(tuple.__add__(self, other))
        return NotImplemented

    def __add__(self, other):
        return NotImplemented

    def __repr__(self):
        return "Word(%r)" % str(self)

    def __str__(self):
        return format_word(self)

    @property
    def is_one(self):
        return len(self) == 0

    def has_star(self):
        return count_stars(self) > 0


class Bracket(tuple):
    """The operator applied to a word: ``Bracket(u)`` is ``[u]``."""

    __slots__ = ()

    def __new__(cls, inner):
        if not isinstance(inner, Word):
            inner = Word(inner)
        return tuple.__new__(cls, (inner,))

    @property
    def inner(self):
        return self[0]

    def __repr__(self):
        return "Bracket(%r)" % str(self.inner)


class StarWord(Word):
    """A word containing the placeholder exactly once."""

    __slots__ = ()

    def __new__(cls, factors=()):
        w = tuple.__new__(cls, factors)
        if count_stars(w) != 1:
            raise ValueError("a star word needs exactly one star, got %r" % format_word(w))
        return w

    def __repr__(self):
        return "StarWord(%r)" % str(self)

    def apply(self, u):
        """Substitute ``u`` for the star."""
        return substitute(self, u)


ONE = Word()
DAGGER = Bracket(ONE)


def letter(name):
    return Word((name,))


def bracket(u):
    return Word((Bracket(u),))


def is_dagger(f):
    return isinstance(f, Bracket) and not f.inner


def count_stars(w):
    n = 0
    for f in w:
        if f == STAR:
            n += 1
        elif isinstance(f, Bracket):
            n += count_stars(f.inner)
    return n


def format_word(w):
    if not w:
        return "1"
    parts = []
    for f in w:
        if isinstance(f, Bracket):
            parts.append("[" + format_word(f.inner) + "]")
        else:
            parts.append(f)
    return " ".join(parts)


class Alphabet:
    """An ordered, finite set of letters; earlier letters are smaller."""

    def __init__(self, letters):
        letters = tuple(letters)
        for a in letters:
            if not isinstance(a, str) or not LETTER_RE.match(a):
                raise ValueError("invalid letter name %r" % (a,))
        if len(set(letters)) != len(letters):
            raise ValueError("duplicate letters in alphabet %r" % (letters,))
        self.letters = letters
        self.rank = {a: i for i, a in enumerate(letters)}

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __contains__(self, a):
        return a in self.rank

    def __eq__(self, other):
        return isinstance(other, Alphabet) and other.letters == self.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "Alphabet(%s)" % ",".join(self.letters)

    @classmethod
    def coerce(cls, a):
        if isinstance(a, Alphabet):
            return a
        if isinstance(a, str):
            a = [s.strip() for s in a.split(",") if s.strip()]
        return cls(a)


def _letters(alphabet):
    # accepts "a,b", an Alphabet or any sequence of letter names
    return Alphabet.coerce(alphabet).letters


def letters_of(w):
    """All letters occurring in ``w`` (at any depth)."""
    out = set()
    for f in w:
        if isinstance(f, Bracket):
            out |= letters_of(f.inner)
        elif f != STAR:
            out.add(f)
    return out


def check_over(w, alphabet):
    bad = letters_of(w) - set(alphabet.letters)
    if bad:
        raise ValueError("letters %s not in alphabet %r" % (sorted(bad), alphabet))


STAR_WORD = StarWord((STAR,))


# degrees -------------------------------------------------------------------

def deg_x(w):
    """Number of letters, counting each ``[1]`` as one letter."""
    n = 0
    for f in w:
        if isinstance(f, Bracket):
            n += deg_x(f.inner) if f.inner else 1
        elif f != STAR:
            n += 1
    return n


def deg_p(w):
    """Number of brackets, not counting ``[1]``."""
    n = 0
    for f in w:
        if isinstance(f, Bracket) and f.inner:
            n += 1 + deg_p(f.inner)
    return n


def breadth(w):
    """Number of top-level factors."""
    return len(w)


def p_breadth(w):
    """Number of top-level brackets, ``[1]`` excluded."""
    return sum(1 for f in w if isinstance(f, Bracket) and f.inner)


def deg_g(w, right=False):
    """Sum over half brackets of the number of letters to their left.

    With ``right=True`` the letters to the right are counted instead.
    """
    total = deg_x(w)
    acc = 0
    seen = 0

    def walk(u):
        nonlocal acc, seen
        for f in u:
            if isinstance(f, Bracket):
                if not f.inner:
                    seen += 1
                    continue
                acc += (total - seen) if right else seen
                walk(f.inner)
                acc += (total - seen) if right else seen
            elif f != STAR:
                seen += 1

    walk(w)
    return acc


def grade(w):
    """Structural grade ``(letters, brackets)``; ``[1]`` counts as a bracket."""
    x = p = 0
    for f in w:
        if isinstance(f, Bracket):
            gx, gp = grade(f.inner)
            x += gx
            p += gp + 1
        elif f != STAR:
            x += 1
    return x, p


def within(w, bound):
    x, p = grade(w)
    return x <= bound[0] and p <= bound[1]


# substitution and occurrences ------------------------------------------------

def substitute(q, u):
    """Replace the star of ``q`` by ``u`` (splicing its factors in)."""
    out = []
    for f in q:
        if f == STAR:
            out.extend(u)
        elif isinstance(f, Bracket):
            out.append(Bracket(substitute(f.inner, u)))
        else:
            out.append(f)
    return Word(out)


def levels(w, path=()):
    """Yield ``(path, factors, rebuild)`` for every bracket level of ``w``.

    ``path`` lists the indices of the enclosing brackets; ``rebuild(fs)``
    returns ``w`` with that level's factor sequence replaced by ``fs``.
    """
    yield path, w, Word
    for i, f in enumerate(w):
        if isinstance(f, Bracket):
            for sub_path, inner, rebuild in levels(f.inner, path + (i,)):
                def outer(fs, i=i, rebuild=rebuild):
                    return Word(w[:i] + (Bracket(rebuild(fs)),) + w[i + 1:])
                yield sub_path, inner, outer


def splice(w, path, start, end, factors):
    """Replace ``w[start:end]`` at bracket level ``path`` by ``factors``."""
    if not path:
        return Word(w[:start] + tuple(factors) + w[end:])
    i = path[0]
    inner = splice(w[i].inner, path[1:], start, end, factors)
    return Word(w[:i] + (Bracket(inner),) + w[i + 1:])


def star_word_at(w, path, start, end):
    q = splice(w, path, start, end, (STAR,))
    return StarWord(q)


def find_occurrences(w, v):
    """All star words ``q`` with ``q|v == w``, for ``v`` not the unit."""
    if not v:
        raise ValueError("occurrences of the unit are not enumerated")
    n = len(v)
    out = []
    for path, fs, _ in levels(w):
        for i in range(len(fs) - n + 1):
            if fs[i:i + n] == v:
                out.append(star_word_at(w, path, i, i + n))
    return out


def is_subword(v, w):
    if not v:
        return True
    n = len(v)
    for _, fs, _ in levels(w):
        for i in range(len(fs) - n + 1):
            if fs[i:i + n] == v:
                return True
    return False


# enumeration -----------------------------------------------------------------

def words_in_box(alphabet, max_x, max_p, unital=False):
    """All words with structural grade at most ``(max_x, max_p)``.

    Returns a list in a deterministic order.  The unit is included when
    ``unital`` is set; otherwise ``[1]`` and the unit never occur.
    """
    letters = _letters(alphabet)
    cache = {}

    def seqs(x, p):
        # all factor sequences of grade <= (x, p), including the empty one
        key = (x, p)
        if key in cache:
            return cache[key]
        res = [((), 0, 0)]
        for a in letters:
            if x >= 1:
                for rest, rx, rp in seqs(x - 1, p):
                    res.append(((a,) + rest, rx + 1, rp))
        if p >= 1:
            for inner, ix, ip in seqs(x, p - 1):
                if not inner and not unital:
                    continue
                b = Bracket(Word(inner))
                for rest, rx, rp in seqs(x - ix, p - 1 - ip):
                    res.append(((b,) + rest, ix + rx, ip + 1 + rp))
        cache[key] = res
        return res

    out = [Word(s) for s, _, _ in seqs(max_x, max_p)]
    if not unital:
        out = [w for w in out if w]
    return out


def words_of_grade(alphabet, x, p, unital=False):
    return [w for w in words_in_box(alphabet, x, p, unital) if grade(w) == (x, p)]


def bracket_free_words(alphabet, max_len, min_len=0):
    out = []
    for n in range(min_len, max_len + 1):
        out.extend(Word(t) for t in product(_letters(alphabet), repeat=n))
    return out


def random_word(rng, alphabet, max_x=4, max_p=3, unital=False, p_bracket=0.35):
    """A random word of grade at most ``(max_x, max_p)``; never the unit
    unless ``unital`` is set and the draw comes out empty."""
    letters = _letters(alphabet)
    budget = [max_x, max_p]

    def seq(depth):
        fs = []
        length = rng.randint(0 if unital or depth else 1, 4)
        for _ in range(length):
            if budget[1] > 0 and rng.random() < p_bracket:
                budget[1] -= 1
                inner = seq(depth + 1)
                if not inner and not unital:
                    if budget[0] == 0:
                        budget[1] += 1
                        continue
                    budget[0] -= 1
                    inner = Word((rng.choice(letters),))
                fs.append(Bracket(inner))
            elif budget[0] > 0:
                budget[0] -= 1
                fs.append(rng.choice(letters))
        return Word(fs)

    w = seq(0)
    if not w and not unital:
        w = Word((rng.choice(letters),))
    return w
