import random

import pytest

from opgs.opi import instantiate, make_opi
from opgs.orders import MonomialOrder
from opgs.poly import OpPoly
from opgs.rewrite import NoRedex, RewriteSystem, rewriting_system
from opgs.text import parse_poly
from opgs.words import Bracket, Word, random_word

ABC = "a,b,c"


def system(tag, alphabet=ABC, **params):
    opi = make_opi(tag, params)
    return rewriting_system(opi, MonomialOrder(opi.entry.order, alphabet))


def p(s, alphabet=ABC):
    return parse_poly(s, alphabet)


def br(u):
    return Word((Bracket(u),))


def test_rewrite_once_examples():
    n3 = system("N3p")
    assert n3.rewrite_once(p("a [b c]")) == p("[a b c]")
    n1b = system("N1b", **{"lambda": 5})
    assert n1b.rewrite_once(p("a [b c]")) == p("[a b c] - [a] b c + 5*a b c")
    with pytest.raises(NoRedex):
        n3.rewrite_once(p("[a] b + c"))


def test_normal_form_examples():
    n3 = system("N3p")
    trace = []
    assert n3.normal_form(p("a [b] [c]"), trace=trace) == p("[[a b] c]")
    assert [(str(w), str(r)) for w, r in trace] == [("a [b] [c]", "[a b] [c]"), ("[a b] [c]", "[[a b] c]")]
    assert n3.normal_form(p("[a] b")) == p("[a] b")
    u6b = system("U6b", "a", **{"lambda": 3})
    assert u6b.normal_form(p("[[a]]", "a")) == p("9*a", "a")


def test_unit_case_rules():
    u1b = system("U1b", "a,b", **{"lambda": 2})
    # [1] - 2 is a rule of the unital system
    assert u1b.normal_form(p("[1]", "a,b")) == p("2", "a,b")
    u5b = system("U5b", "a,b")
    assert u5b.is_irreducible(Word((Bracket(Word()),)))


def test_joinable_basics():
    n3 = system("N3p")
    f = p("a [b] [c]")
    assert n3.joinable(f, f)
    assert n3.joinable(f, p("[[a b] c]"))
    assert not n3.joinable(p("a"), p("b"))


def test_u1a_common_form():
    l, m, n = 2, 1, 2
    opi = make_opi("U1a", {"lambda": l, "mu": m, "nu": n})
    sys = rewriting_system(opi, MonomialOrder("db", ABC))
    u, v, w = (Word((x,)) for x in "abc")
    lhs = lambda x, y: OpPoly.word(br(x) * br(y))
    r_uv = lhs(u, v) - instantiate(opi, (u, v))
    r_vw = lhs(v, w) - instantiate(opi, (v, w))
    left = r_uv * OpPoly.word(br(w))
    right = OpPoly.word(br(u)) * r_vw
    common = p("%d*[a] b [c] + %d*a [b] c - %d*a [b c] - %d*[a b] c + %d*[a b c] - %d*a b c"
               % (l, l * l, l * m, l * m, m * m, (l - m) * n))
    assert sys.joinable(left, right)
    assert sys.normal_form(left) == sys.normal_form(common)


SYSTEMS = [("N3p", {}), ("N1b", {"lambda": 1}), ("N4p", {}), ("N1a", {"lambda": 1, "mu": 1, "nu": 0}),
           ("U1b", {"lambda": 2}), ("U5b", {}), ("U3p", {"lambda": 2})]


@pytest.mark.parametrize("tag,params", SYSTEMS)
def test_steps_decrease_and_nf_idempotent(tag, params):
    opi = make_opi(tag, params)
    sys = rewriting_system(opi, MonomialOrder(opi.entry.order, "a,b"))
    key = sys.order.key
    rng = random.Random(9)
    for _ in range(40):
        f = OpPoly.word(random_word(rng, "a,b", 4, 2, unital=opi.unital), rng.randint(1, 3))
        f = f + OpPoly.word(random_word(rng, "a,b", 3, 2, unital=opi.unital))
        trace = []
        nf = sys.normal_form(f, trace=trace)
        for word, rep in trace:
            assert all(key(x) < key(word) for x in rep.support())
        assert all(sys.is_irreducible(x) for x in nf.support())
        assert sys.normal_form(nf) == nf


def test_rules_are_simple_and_compatible():
    for tag, params in SYSTEMS:
        opi = make_opi(tag, params)
        sys = rewriting_system(opi, MonomialOrder(opi.entry.order, "a,b"))
        rng = random.Random(4)
        for _ in range(30):
            w = random_word(rng, "a,b", 4, 3, unital=opi.unital)
            for r in sys.redexes(w):
                rep = r.replacement
                assert w not in rep.support()
                assert all(sys.order.key(x) < sys.order.key(w) for x in rep.support())


def test_rewrite_system_needs_order():
    with pytest.raises(TypeError):
        RewriteSystem([], "dl")
