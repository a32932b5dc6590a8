import random
from fractions import Fraction

import pytest

from opgs.freealg import check_equivalence
from opgs.opi import (CATALOG, Opi, OpiError, catalog_tags, generate_s, instantiate, make_opi,
                      primed_form, substitute_vars)
from opgs.orders import MonomialOrder
from opgs.rewrite import check_instance
from opgs.text import parse_poly, parse_word
from opgs.words import ONE, random_word

AB = "a,b"


def sample_params(entry, rng):
    if entry.tag.endswith("1a"):
        lam, mu = Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))
        return {"lambda": lam, "mu": mu, "nu": lam * lam - lam * mu}
    if entry.tag in ("N1", "U1"):
        a, b = Fraction(rng.randint(-3, 3)), Fraction(rng.randint(1, 3))
        return {"a": a, "b": b, "c": (a * a - a) / b}
    return {k: Fraction(rng.randint(-3, 3)) for k in entry.params}


def test_every_tag_builds():
    rng = random.Random(0)
    for tag in catalog_tags():
        entry = CATALOG[tag]
        params = sample_params(entry, rng)
        opi = make_opi(tag, params)
        assert opi.unital == entry.unital
        assert opi.arity in (1, 2)


def test_aliases_and_primes():
    assert make_opi("N2b", {"lambda": 2}) == make_opi("N1c", {"lambda": 2})
    assert make_opi("U6b", {"lambda": 2}) == make_opi("U1c", {"lambda": 2})
    assert make_opi("U5a", lam=1) == make_opi("U1b", {"lambda": 1})
    assert make_opi("N3'") == make_opi("N3p")
    assert make_opi("U1'b", {"lambda": 0}).tag == "U1b"
    with pytest.raises(OpiError):
        make_opi("N9")


def test_parameter_errors():
    with pytest.raises(OpiError):
        make_opi("N1a", {"lambda": 1, "mu": 1, "nu": 1})
    with pytest.raises(OpiError):
        make_opi("N1b")
    with pytest.raises(OpiError):
        make_opi("N3p", {"lambda": 1})
    with pytest.raises(OpiError):
        make_opi("U1", {"a": 2, "b": 1, "c": 1})


def test_multilinear_validator():
    with pytest.raises(OpiError):
        Opi("custom", parse_poly("x [x]"), ("x",))
    with pytest.raises(OpiError):
        Opi("custom", parse_poly("x [y] - x"), ("x", "y"))


def test_instantiate():
    n3 = make_opi("N3p")
    assert instantiate(n3, (parse_word("a"), parse_word("[b]"))) == parse_poly("a [[b]] - [a [b]]")
    u1b = make_opi("U1b", {"lambda": 2})
    f = instantiate(u1b, (ONE, parse_word("b")))
    assert MonomialOrder("udl", AB).leading(f)[0] == parse_word("[1] b")
    u5b = make_opi("U5b")
    v = parse_word("a [b]")
    assert not instantiate(u5b, (ONE, v))
    assert not instantiate(u5b, (v, ONE))
    with pytest.raises(OpiError):
        instantiate(n3, (parse_word("a"),))
    with pytest.raises(OpiError):
        instantiate(n3, (ONE, parse_word("a")))


def test_generate_s():
    assert generate_s(make_opi("N3p"), "a", (1, 0)) == [parse_poly("a [a] - [a a]")]
    assert generate_s(make_opi("N3p"), "a", (0, 0)) == []
    got = set(generate_s(make_opi("U6b", {"lambda": 3}), "a", (1, 0)))
    assert got == {parse_poly("[a] - 3*a"), parse_poly("[1] - 3")}


def test_generate_s_deduplicates():
    out = generate_s(make_opi("N1c", {"lambda": 1}), AB, (2, 0))
    assert len(out) == len(set(out))


@pytest.mark.parametrize("tag,params", [
    ("N1a", {"lambda": 2, "mu": 1, "nu": 2}), ("N2a", {"lambda": 1, "mu": 2}), ("N1b", {"lambda": 1}),
    ("N1c", {"lambda": 2}), ("N3p", {}), ("N4p", {}), ("U1a", {"lambda": 1, "mu": 1, "nu": 0}),
    ("U2a", {"lambda": 1, "mu": 2}), ("U1b", {"lambda": 2}), ("U5b", {}), ("U3p", {"lambda": 3}),
    ("U1c", {"lambda": 2}),
])
def test_declared_lead_is_stable(tag, params):
    opi = make_opi(tag, params)
    order = MonomialOrder(opi.entry.order, AB)
    rng = random.Random(5)
    for _ in range(100):
        args = [random_word(rng, AB, 3, 2) for _ in range(opi.arity)]
        s, lead = check_instance(opi, args, order)
        declared = substitute_vars(parse_word(opi.entry.lead), dict(zip(opi.variables, args)))
        assert s is not None and lead == declared


def test_equivalence_examples():
    assert check_equivalence(make_opi("U4", a=2), make_opi("U4p", lam=2), "z", (3, 2)) == "Equal"
    n1b = make_opi("N1b", lam=1)
    assert check_equivalence(n1b, n1b, "z", (3, 2)) == "Equal"
    assert check_equivalence(make_opi("U5", a=-1, b=1), make_opi("U5c"), "z", (2, 1)) == "Equal"


@pytest.mark.slow
def test_raw_to_primed_random_parameters():
    rng = random.Random(11)
    for _ in range(6):
        x = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        y = Fraction(rng.randint(1, 3))
        a = Fraction(rng.randint(-3, 3))
        u1 = make_opi("U1", a=a, b=y, c=(a * a - a) / y)
        for raw in [u1, make_opi("U2", a=y, b=x), make_opi("U3", a=x), make_opi("U5", a=y, b=x),
                    make_opi("N2", a=y, b=x), make_opi("U6", l00=x, l10=y, l01=-x)]:
            primed, _ = primed_form(raw)
            assert check_equivalence(raw, primed, "z", (3, 2)) == "Equal", (raw, primed)
