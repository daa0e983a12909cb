import random

import pytest
from hypothesis import given, settings, strategies as st

from dgw import diagrams as dg
from dgw.diagrams import Atom, Diagram, DiagramError
from dgw.presentations import parse_presentation
from dgw.sampling import random_diagram, random_walk
from dgw.thompson import generator, pr

import oracles


def test_atom_text():
    a = Atom.parse("-1@3")
    assert a == Atom(1, -1, 3)
    assert str(a) == "-1@3"
    assert a.inverse() == Atom(1, 1, 3)


def test_replay_rejects_bad_atom(p23):
    with pytest.raises(DiagramError):
        Diagram(p23, (0,), (Atom(1, 1, 0),))
    with pytest.raises(DiagramError):
        Diagram(p23, (0,), (Atom(0, 1, 1),))


def test_example_bottom(example, p23):
    assert example.top == p23.word("aaaaa")
    assert example.bottom == (0,)
    assert len(example.atoms) == 6


def test_single_atom_p9():
    d = Diagram(pr(9), (0,), (Atom(0, 1, 0),))
    assert dg.bottom(d) == (0,) * 9


def test_format_roundtrip(example, p23):
    assert dg.parse_diagram(dg.format_diagram(example), p23) == example


def test_parse_errors(p23):
    with pytest.raises(DiagramError):
        dg.parse_diagram("+0@0\n", p23)
    with pytest.raises(DiagramError):
        dg.parse_diagram("base: a\n+0@x\n", p23)


def test_eps_laws(p23, example):
    e = dg.eps(p23, (0,))
    assert len(e.atoms) == 0
    assert dg.bottom(e) == (0,)
    assert dg.invert(e) == e
    assert dg.compose(dg.eps(p23, example.top), example) == example
    assert dg.compose(example, dg.eps(p23, example.bottom)) == example


def test_compose_mismatch(p23, example):
    with pytest.raises(DiagramError):
        dg.compose(example, example)


def test_dipole_compose(p23):
    fwd = Diagram(p23, (0,), (Atom(0, 1, 0),))
    d = dg.compose(fwd, dg.invert(fwd))
    assert (d.top, d.bottom, len(d.atoms)) == ((0,), (0,), 2)
    assert dg.reduce(d) == dg.eps(p23, (0,))


def test_example_halves(example):
    upper, lower = dg.split(example)
    assert dg.isotopic(dg.compose(upper, dg.invert(lower)), example)


def test_sum(p23, example):
    u, v = p23.word("ab"), p23.word("ba")
    assert dg.sum(dg.eps(p23, u), dg.eps(p23, v)) == dg.eps(p23, u + v)
    s = dg.sum(example, dg.invert(example))
    assert len(s.atoms) == 12
    assert s.top == example.top + example.bottom
    assert s.bottom == example.bottom + example.top


def test_sum_associative(p23):
    rng = random.Random(5)
    for _ in range(50):
        a, b, c = (random_diagram(p23, rng, 10) for _ in range(3))
        assert dg.canon(dg.sum(dg.sum(a, b), c)) == dg.canon(dg.sum(a, dg.sum(b, c)))


def test_interchange_law(p23):
    # (A+B)o(C+D) is isotopic to (AoC)+(BoD)
    rng = random.Random(6)
    for _ in range(50):
        a, b = random_diagram(p23, rng, 8), random_diagram(p23, rng, 8)
        c = random_walk(p23, a.bottom, 5, rng, 12)
        d = random_walk(p23, b.bottom, 5, rng, 12)
        lhs = dg.compose(dg.sum(a, b), dg.sum(c, d))
        rhs = dg.sum(dg.compose(a, c), dg.compose(b, d))
        assert dg.isotopic(lhs, rhs)


def test_invert_laws(p23, example):
    single = Diagram(p23, (0,), (Atom(0, 1, 0),))
    assert dg.invert(single).atoms == (Atom(0, -1, 0),)
    assert dg.invert(dg.invert(example)) == example
    assert dg.reduce(dg.compose(example, dg.invert(example))) == dg.eps(p23, example.top)


def test_canon_disjoint_cells():
    p = pr(2)
    d1 = Diagram(p, (0,) * 4, (Atom(0, 1, 0), Atom(0, 1, 4)))
    d2 = Diagram(p, (0,) * 4, (Atom(0, 1, 3), Atom(0, 1, 0)))
    assert dg.canon(d1) == dg.canon(d2)


def test_canon_shuffle_invariance():
    rng = random.Random(11)
    p = parse_presentation("<a,b | a=bab, b=aba>")
    d = random_walk(p, p.word("abab"), 20, rng, 30)
    assert len(d.atoms) == 20
    ref = dg.canon(d)
    assert dg.canon(ref) == ref
    for _ in range(1000):
        assert dg.canon(oracles.shuffle(d, rng, 60)) == ref


def test_canon_is_class_representative():
    # canon picks a member of the oracle's isotopy class
    rng = random.Random(3)
    p = pr(2)
    for _ in range(40):
        d = random_walk(p, (0, 0), 7, rng, 8)
        cls = oracles.isotopy_class(d)
        c = dg.canon(d)
        assert c.atoms in cls
        assert all(dg.canon(Diagram(p, d.top, atoms)) == c for atoms in list(cls)[:50])


def test_x0_irreducible_by_oracle():
    g = generator(2, 0)
    assert [str(a) for a in g.atoms] == ["+0@0", "+0@0", "-0@1", "-0@0"]
    assert oracles.find_dipole(g) is None
    assert dg.reduce(g) == g
    assert dg.is_reduced(g)


def test_reduce_matches_brute_force():
    rng = random.Random(8)
    for k in range(150):
        p = (pr(2), parse_presentation("<a,b | a=bab, b=aba>"))[k % 2]
        d = random_diagram(p, rng, max_atoms=8, max_word_len=7)
        fast = dg.reduce(d)
        slow = oracles.brute_reduce(d)
        assert len(fast.atoms) == len(slow.atoms)
        assert oracles.brute_isotopic(fast, slow)
        assert oracles.find_dipole(fast) is None


def test_reduce_order_independent(p23):
    rng = random.Random(9)
    for k in range(200):
        p = (pr(2), p23)[k % 2]
        d = random_diagram(p, rng, 30)
        ref = dg.reduce(d)
        for _ in range(3):
            assert dg.reduce(d, rng=rng) == ref


def test_equal_examples(p23):
    fwd = Diagram(p23, (0,), (Atom(0, 1, 0),))
    assert dg.equal(dg.eps(p23, (0,)), dg.compose(fwd, dg.invert(fwd)))
    assert not dg.equal(generator(2, 0), generator(2, 1))
    rng = random.Random(1)
    d = random_diagram(p23, rng, 15)
    assert dg.equal(d, oracles.shuffle(d, rng))


def test_split_examples(p23, example):
    e = dg.eps(p23, (0,))
    assert dg.split(e) == (e, e)
    upper, lower = dg.split(example)
    assert (len(upper.atoms), len(lower.atoms)) == (2, 4)
    assert p23.show(upper.bottom) == "ababababa"
    assert upper.is_positive and lower.is_positive
    pos = random_walk(p23, (0,), 6, random.Random(2), 20, positive=True)
    up, low = dg.split(pos)
    assert dg.isotopic(up, pos) and low == dg.eps(p23, pos.bottom)


def test_split_errors(p23):
    with pytest.raises(DiagramError):
        dg.split(dg.eps(parse_presentation("<a,b | ab=ba>"), (0, 1)))
    fwd = Diagram(p23, (0,), (Atom(0, 1, 0),))
    with pytest.raises(DiagramError):
        dg.split(dg.compose(fwd, dg.invert(fwd)))


def test_split_random(p23):
    rng = random.Random(4)
    for _ in range(200):
        d = dg.reduce(random_diagram(p23, rng, 20))
        upper, lower = dg.split(d)
        assert upper.is_positive and lower.is_positive
        assert upper.bottom == lower.bottom
        assert dg.isotopic(dg.compose(upper, dg.invert(lower)), d)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_group_axioms(seed):
    p = parse_presentation("<a,b | a=bab, b=aba>")
    rng = random.Random(seed)
    a = random_diagram(p, rng, 15)
    b = random_walk(p, a.bottom, rng.randint(0, 8), rng, 12)
    c = random_walk(p, b.bottom, rng.randint(0, 8), rng, 12)
    assert dg.reduce(dg.compose(a, dg.invert(a))) == dg.eps(p, a.top)
    assert dg.canon(dg.compose(dg.compose(a, b), c)) == dg.canon(dg.compose(a, dg.compose(b, c)))
    assert dg.reduce(dg.reduce(a)) == dg.reduce(a)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_invariants(seed):
    rng = random.Random(seed)
    p = (pr(2), pr(3), parse_presentation("<a,b | a=bab, b=aba>"))[seed % 3]
    d = random_diagram(p, rng, 25)
    # every constructor output replays, and atom count parity is preserved by reduction
    for out in (dg.reduce(d), dg.canon(d), dg.invert(d)):
        assert Diagram(p, out.top, out.atoms).bottom == out.bottom
    assert len(dg.reduce(d).atoms) % 2 == len(d.atoms) % 2
    assert dg.reduce(d).bottom == d.bottom
