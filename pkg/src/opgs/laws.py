"""Randomized checks of the laws a monomial order must satisfy."""

from dataclasses import dataclass

from .orders import OrderKind
from .words import DAGGER, STAR, Bracket, StarWord, Word, levels, random_word, splice


@dataclass
class LawResult:
    ok: bool
    counterexample: str = None


def _sample(order, rng, unital):
    letters = order.alphabet.letters
    if order.kind is OrderKind.DLEX:
        return Word(rng.choice(letters) for _ in range(rng.randint(0 if unital else 1, 5)))
    allow_unit = unital and order.kind in (OrderKind.UDL, OrderKind.DB)
    w = random_word(rng, letters, max_x=5, max_p=3, unital=allow_unit)
    return w


def random_star_word(order, rng, unital=False):
    """A random context ``q`` suitable for the order's domain."""
    if order.kind is OrderKind.DLEX:
        w = _sample(order, rng, True)
        i = rng.randint(0, len(w))
        return StarWord(w[:i] + (STAR,) + w[i:])
    w = _sample(order, rng, unital)
    spots = []
    for path, fs, _ in levels(w):
        for i in range(len(fs) + 1):
            spots.append((path, i))
    path, i = rng.choice(spots)
    q = splice(w, path, i, i, (STAR,))
    if rng.random() < 0.3:
        q = Word((Bracket(q),))
    return StarWord(q)


def check_order_laws(order, rng, samples, compat_samples=None, unital=False):
    """Totality, antisymmetry, transitivity and compatibility on random words."""
    key = order.key
    for _ in range(samples):
        u, v, w = (_sample(order, rng, unital) for _ in range(3))
        ku, kv, kw = key(u), key(v), key(w)
        if (ku == kv) != (u == v):
            return LawResult(False, "antisymmetry: %s vs %s" % (u, v))
        if order.cmp(u, v) != -order.cmp(v, u):
            return LawResult(False, "totality: %s vs %s" % (u, v))
        if ku < kv < kw and not ku < kw:
            return LawResult(False, "transitivity: %s, %s, %s" % (u, v, w))
    for _ in range(compat_samples or samples):
        u, v = _sample(order, rng, unital), _sample(order, rng, unital)
        if u == v:
            continue
        if key(v) < key(u):
            u, v = v, u
        q = random_star_word(order, rng, unital)
        a, b = q.apply(u), q.apply(v)
        if not key(a) < key(b):
            return LawResult(False, "compatibility: %s < %s but not under %s" % (u, v, q))
    return LawResult(True)


def udl_inequalities(u, v):
    """Pairs ``(smaller, larger)`` that udl must order; the first three form one chain."""
    b = Word((Bracket(u),))
    d = Word((DAGGER,))
    return [
        ("[u]v < [uv]", b * v, Word((Bracket(u * v),))),
        ("[uv] < u[v]", Word((Bracket(u * v),)), u * Word((Bracket(v),))),
        ("u[v] < [u][v]", u * Word((Bracket(v),)), b * Word((Bracket(v),))),
        ("u[1]v < [u]v", u * d * v, b * v),
        ("[1]uv < [u]v", d * u * v, b * v),
        ("u < [1]u", u, d * u),
        ("u < u[1]", u, u * d),
    ]


def greedy_descent(order, rng, start, budget=10000):
    """Follow random strictly decreasing moves from ``start``.

    Returns the number of steps taken before no move decreases, or None if
    the budget ran out.
    """
    key = order.key
    letters = order.alphabet.letters
    w = start
    for step in range(budget):
        cands = [m for m in _moves(w, letters, rng) if m and order.in_domain(m) and key(m) < key(w)]
        if not cands:
            return step
        w = rng.choice(cands)
    return None


def _moves(w, letters, rng):
    out = []
    for path, fs, _ in levels(w):
        for i, f in enumerate(fs):
            out.append(splice(w, path, i, i + 1, ()))
            if isinstance(f, Bracket):
                extra = tuple(rng.choice(letters) for _ in range(rng.randint(0, 2)))
                out.append(splice(w, path, i, i + 1, tuple(f.inner) + extra))
            else:
                for a in letters:
                    if a != f:
                        out.append(splice(w, path, i, i + 1, (a,)))
    return out
