import pytest

from opgs.config import ConfigError, load_presentation, presentation_from_dict
from opgs.freealg import (BasisFamily, ClosureError, PresentationError, build_generating_set, compare_shape,
                          bounded_instances, enumerate_basis, irr_cells, linear_parts_basis, presentation,
                          quotient_dim_oracle)
from opgs.gs import GeneratorSet, irreducibles
from opgs.opi import make_opi
from opgs.text import parse_poly
from opgs.words import Bracket, Word, words_in_box

AB = "a,b"

FAMILIES = [("N1a", {"lambda": 1, "mu": 1, "nu": 0}), ("N1b", {"lambda": 1}), ("N2a", {"lambda": 1, "mu": 2}),
            ("N3p", {}), ("N4p", {}), ("N1c", {"lambda": 2}), ("U1a", {"lambda": 1, "mu": 1, "nu": 0}),
            ("U2a", {"lambda": 1, "mu": 2}), ("U1b", {"lambda": 2}), ("U5b", {}), ("U3p", {"lambda": 3}),
            ("U1c", {"lambda": 2}), ("U5c", {})]


def test_linear_parts_basis():
    assert linear_parts_basis([parse_poly("a b - a", AB)], AB) == [parse_poly("a", AB)]
    assert linear_parts_basis([parse_poly("b a - a b", AB)], AB) == []
    got = linear_parts_basis([parse_poly("a + b", AB), parse_poly("b", AB)], AB)
    assert set(got) == {parse_poly("a", AB), parse_poly("b", AB)}
    assert linear_parts_basis([], AB) == []
    # self-reduced, pivots on the largest letter: no element mentions another's pivot
    got = linear_parts_basis([parse_poly("a + b", "a,b,c"), parse_poly("b + c", "a,b,c")], "a,b,c")
    assert set(got) == {parse_poly("a + b", "a,b,c"), parse_poly("c - a", "a,b,c")}


def test_build_generating_set():
    p = presentation(AB, ["b a - a b"], "N3p")
    gs, verdict = build_generating_set(p)
    assert verdict == "gs" and gs.relations == (parse_poly("b a - a b", AB),) and gs.extra == ()
    p = presentation(AB, ["a b - a"], "N1c", {"lambda": 2})
    gs, _ = build_generating_set(p)
    assert gs.extra == (parse_poly("[a] - 2*a", AB),)
    assert build_generating_set(p, drop_extra=True)[0].extra == ()
    assert build_generating_set(presentation(AB, [], "U5c"))[1] == "vanishes"
    assert build_generating_set(presentation(AB, [], "U1c", {"lambda": 1}))[1] == "isomorphic"


def test_phi4_with_zero_linear_parts():
    p = presentation(AB, ["b a - a b"], "N1c", {"lambda": 2})
    gs, _ = build_generating_set(p)
    assert gs.extra == ()


def test_presentation_errors():
    with pytest.raises(PresentationError):
        presentation(AB, [], make_opi("N3p"), unital=True)
    with pytest.raises(PresentationError):
        presentation(AB, ["[a] - b"], "N3p")
    with pytest.raises(PresentationError):
        presentation(AB, ["a - 1"], "N3p")
    # not a dlex GS basis: bb -> a and ab -> b disagree on abb
    with pytest.raises(PresentationError):
        presentation(AB, ["b b - a", "a b - b"], "N3p")
    with pytest.raises(PresentationError):
        build_generating_set(presentation("z", [], "U4", {"a": 2}))


def test_order_override_warns():
    p = presentation(AB, [], "N3p", order="udl")
    with pytest.warns(UserWarning):
        build_generating_set(p)


def test_nested_left_example():
    p = presentation("a", [], "N3p")
    words = enumerate_basis(BasisFamily.named("nested_left", p), p, (2, 2))
    assert sorted(map(str, words)) == sorted(["a", "a a", "[a]", "[[a]]", "[a] a", "[a a]", "[[a]] a",
                                              "[[a a]]", "[[a] a]"])


@pytest.mark.parametrize("tag,params", FAMILIES)
def test_any_shape_at_lowest_bound(tag, params):
    p = presentation(AB, ["a b - a"], tag, params)
    words = enumerate_basis(BasisFamily.auto(p), p, (1, 0))
    expected = {"a", "b"} | ({"1"} if p.unital else set())
    if tag == "U5c":
        expected = set()
    assert set(map(str, words)) == expected


def test_phi4_shape_interiors():
    p = presentation(AB, ["a b - a"], "N1c", {"lambda": 2})
    words = enumerate_basis(BasisFamily.auto(p), p, (3, 2))

    def innermost(w):
        for f in w:
            if isinstance(f, Bracket):
                assert len(f.inner) == 1
                if isinstance(f.inner[0], Bracket):
                    yield from innermost(f.inner)
                else:
                    yield f.inner[0]

    assert {x for w in words for x in innermost(w)} == {"b"}


def test_oracle_examples():
    p = presentation("a", [], "U6b", {"lambda": 3})
    cells = quotient_dim_oracle(p, (2, 3))
    assert [cells[(i, j)] for i in range(3) for j in range(4)] == [1, 0, 0, 0] * 3
    free = presentation(AB, [], None)
    cells = quotient_dim_oracle(free, (3, 2))
    assert sum(cells.values()) == len(words_in_box(AB, 3, 2)) == 262


def test_oracle_matches_n3_shape():
    p = presentation("a", [], "N3p")
    family = BasisFamily.auto(p)
    assert irr_cells(enumerate_basis(family, p, (3, 2)), (3, 2)) == quotient_dim_oracle(p, (3, 2))


def test_oracle_refuses_escaping_relations():
    with pytest.raises(ClosureError):
        bounded_instances([], AB, (3, 2), False, [parse_poly("[a] - a a", AB)])


def _dagger_as_letter(w):
    out = []
    for f in w:
        if isinstance(f, Bracket):
            out.append("d" if not f.inner else Bracket(_dagger_as_letter(f.inner)))
        else:
            out.append(f)
    return Word(out)


def test_u1b_two_routes_to_irreducibles():
    # unital U1b over Z versus nonunital N1b over Z plus a letter d standing for [1],
    # ranked below the other letters, with the extra rule d - lambda
    p = presentation(AB, [], "U1b", {"lambda": 2})
    gs, _ = build_generating_set(p)
    alt = GeneratorSet(make_opi("N1b", {"lambda": 2}), "d,a,b", "dl",
                       extra=[parse_poly("d - 2", "d,a,b")])
    for w in words_in_box(AB, 3, 2, unital=True):
        if w:
            assert gs.system.is_irreducible(w) == alt.system.is_irreducible(_dagger_as_letter(w)), w


@pytest.mark.parametrize("tag,params", FAMILIES)
@pytest.mark.parametrize("rels", [[], ["b a - a b"], ["a b - a"]])
def test_shape_matches_irreducibles_as_sets(tag, params, rels):
    p = presentation(AB, rels, tag, params)
    gs, _ = build_generating_set(p)
    assert set(enumerate_basis(BasisFamily.auto(p), p, (3, 2))) == set(irreducibles(gs, (3, 2)))


def test_compare_shape_small():
    p = presentation("a", [], "N1b", {"lambda": 1})
    s, i, o = compare_shape(p, (2, 2))
    assert s == i == o


def test_config(tmp_path):
    f = tmp_path / "p.toml"
    f.write_text('alphabet = ["a", "b"]\nrelations = ["a b - a"]\nopi = "N1c"\nparams = { lambda = "2" }\n')
    p = load_presentation(str(f))
    assert p.opi == make_opi("N1c", {"lambda": 2}) and not p.unital
    p = presentation_from_dict({"alphabet": "a,b", "opi": "N1b", "params": {"lambda": 1}, "unital": False})
    assert p.opi.param("lambda") == 1
    with pytest.raises(ConfigError):
        presentation_from_dict({"alphabet": ["a"], "opi": "N1b", "params": {"lambda": 0.5}})
    with pytest.raises(ConfigError):
        presentation_from_dict({"alphabet": ["a"], "colour": "red"})
    with pytest.raises(ConfigError):
        presentation_from_dict({"opi": "N3p"})
    bad = tmp_path / "bad.toml"
    bad.write_text("alphabet = [")
    with pytest.raises(ConfigError):
        load_presentation(str(bad))
