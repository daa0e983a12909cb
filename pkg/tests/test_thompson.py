import random

import pytest
from hypothesis import given, settings, strategies as st

from dgw import diagrams as dg
from dgw.sampling import random_fword
from dgw.thompson import FWord, ThompsonError, generator, normal_form, pr, relation_holds, word_to_diagram

import oracles


def w(r, text):
    return FWord.parse(r, text)


def test_pr():
    assert str(pr(2)) == "<x | x=xx>"
    assert len(pr(9).relations[0][1]) == 9
    with pytest.raises(ThompsonError):
        pr(1)


def test_fword_text():
    x = w(3, "x0 X2 x1")
    assert str(x) == "x0 X2 x1"
    assert str(x.inverse()) == "X1 x2 X0"
    with pytest.raises(ThompsonError):
        w(3, "y1")


def test_generator_shape():
    for r in (2, 3, 9):
        for i in range(5):
            g = generator(r, i)
            assert g.top == g.bottom == (0,)
            if r == 2:
                assert len(g.atoms) == 2 * i + 4
            assert len(g.atoms) % 2 == 0 and len(g.atoms) >= 4
            assert dg.is_reduced(g)


def test_generator_irreducible_by_oracle():
    for r, i in ((2, 0), (2, 1), (3, 1), (9, 0)):
        assert oracles.find_dipole(generator(r, i)) is None


def test_generators_distinct():
    for r in (2, 3):
        gens = [generator(r, i) for i in range(5)]
        for i in range(5):
            assert not dg.equal(gens[i], dg.eps(pr(r), (0,)))
            for j in range(i):
                assert not dg.equal(gens[i], gens[j])


def test_generator_inverse():
    g = generator(2, 0)
    assert dg.reduce(dg.compose(g, dg.invert(g))) == dg.eps(pr(2), (0,))


def test_word_to_diagram():
    assert word_to_diagram(2, FWord(2)) == dg.eps(pr(2), (0,))
    assert word_to_diagram(2, w(2, "x0 X0")) == dg.eps(pr(2), (0,))
    assert dg.equal(word_to_diagram(2, w(2, "x1 x0")), word_to_diagram(2, w(2, "x0 x2")))
    d = word_to_diagram(9, w(9, "x0 x1"))
    assert dg.is_reduced(d)
    assert oracles.find_dipole(d) is None
    assert len(d.atoms) == 6


def test_relations():
    assert relation_holds(2, 0, 1)
    assert relation_holds(9, 2, 5)
    # x1 x0 = x0 x1 is not a relation
    assert not dg.equal(word_to_diagram(2, w(2, "x1 x0")), word_to_diagram(2, w(2, "x0 x1")))
    with pytest.raises(ThompsonError):
        relation_holds(2, 3, 3)


@pytest.mark.parametrize("r", [2, 3, 7, 9, 11, 25])
def test_all_relations(r):
    assert all(relation_holds(r, i, j) for j in range(1, 7) for i in range(j))


def test_normal_form_examples():
    assert str(normal_form(2, w(2, "x1 x0"))) == "x0 x2"
    assert normal_form(2, w(2, "x0 X0")).factors == ()
    assert str(normal_form(3, w(3, "X1 x1 x4"))) == "x4"


def _is_normal_shape(nf):
    pos = [i for i, s in nf.factors if s > 0]
    neg = [i for i, s in nf.factors if s < 0]
    k = len(pos)
    return (all(s > 0 for _, s in nf.factors[:k]) and pos == sorted(pos)
            and neg == sorted(neg, reverse=True))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 9]), st.lists(st.tuples(st.integers(0, 6), st.sampled_from([1, -1])), max_size=15))
def test_normal_form_properties(r, factors):
    x = FWord(r, tuple(factors))
    nf = normal_form(r, x)
    assert _is_normal_shape(nf)
    assert dg.equal(word_to_diagram(r, nf), word_to_diagram(r, x))
    assert normal_form(r, nf) == nf


def test_normal_form_equality_complete():
    rng = random.Random(21)
    r = 2
    samples = []
    for _ in range(250):
        x = random_fword(r, rng, max_length=15, max_index=4)
        samples.append(x)
        # an equal word built by inserting a relation and a free cancellation
        i = rng.randint(0, 3)
        j = rng.randint(i + 1, 4)
        k = rng.randint(0, len(x))
        lhs = FWord(r, ((j, 1), (i, 1)))
        rhs = FWord(r, ((i, 1), (j + r - 1, 1)))
        y = FWord(r, x.factors[:k]) * lhs * rhs.inverse() * FWord(r, ((i, -1), (i, 1))) * FWord(r, x.factors[k:])
        samples.append(y)
        assert normal_form(r, x) == normal_form(r, y)
    nfs = [normal_form(r, x) for x in samples]
    diagrams = [dg.reduce(word_to_diagram(r, x)) for x in samples]
    for a in range(0, len(samples), 7):
        for b in range(a + 1, len(samples), 5):
            assert (nfs[a] == nfs[b]) == (diagrams[a] == diagrams[b])
