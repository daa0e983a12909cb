import itertools
import random

import pytest

from dgw.diagrams import Diagram
from dgw.families import fibonacci_presentation, instance, johnson_presentation
from dgw.presentations import parse_presentation
from dgw.semigroups import EQUAL, UNEQUAL, UNKNOWN, congruence_levels, count_elements, word_equal
from dgw.thompson import pr

import oracles


def test_word_equal_example(p23):
    v = word_equal(p23, p23.word("aaaaa"), p23.word("a"))
    assert v.kind == EQUAL and v
    d = v.derivation
    # the derivation replays from u to v
    assert Diagram(p23, d.top, d.atoms).bottom == (0,)
    assert d.top == p23.word("aaaaa")


def test_word_equal_trivial(p23):
    v = word_equal(p23, p23.word("abb"), p23.word("abb"))
    assert v.kind == EQUAL and v.derivation.atoms == ()


def test_word_equal_never_wrong(p23):
    v = word_equal(p23, (0,), (1,), max_len=7, max_states=5000)
    assert v.kind in (UNEQUAL, UNKNOWN)
    assert "max_len=7" in str(v)
    assert word_equal(p23, (0,), (1,), max_len=3).kind == UNEQUAL


def test_word_equal_state_bound():
    p = fibonacci_presentation(3)
    v = word_equal(p, p.word("a"), p.word("b"), max_len=12, max_states=50)
    assert v.kind == UNKNOWN


def test_word_equal_bad_bounds(p23):
    with pytest.raises(ValueError):
        word_equal(p23, (0,), (0,), max_len=0)


def test_derivations_sound():
    p = fibonacci_presentation(3)
    rng = random.Random(0)
    for _ in range(30):
        u = tuple(rng.randrange(3) for _ in range(rng.randint(1, 4)))
        w = tuple(rng.randrange(3) for _ in range(rng.randint(1, 4)))
        v = word_equal(p, u, w, max_len=8)
        if v.kind == EQUAL:
            assert v.derivation.top == u and v.derivation.bottom == w
            # equal in the semigroup implies equal images in Q8
            assert len(oracles.quaternion_images([u, w])) == 1


def test_counts():
    assert count_elements(fibonacci_presentation(3)) == 8
    assert count_elements(instance("fib4").target) == 10
    assert count_elements(pr(2)) == 1
    assert count_elements(parse_presentation("<a,b | a=bab, b=aba>")) == 8
    assert count_elements(fibonacci_presentation(4)) == 10


def test_q8_oracle():
    # every word maps into Q8 and all 8 units are hit, so 8 is also a lower bound
    words = [w for n in range(1, 6) for w in itertools.product(range(3), repeat=n)]
    assert len(oracles.quaternion_images(words)) == 8


def test_unknown_not_infinite():
    # the free semigroup on one letter never settles
    assert count_elements(parse_presentation("<a,b | a=ab>"), max_len=8) is None


def test_count_monotone():
    p = instance("fib4").target
    counts = [count_elements(p, L) for L in range(4, 13)]
    known = [c for c in counts if c is not None]
    assert known and all(c == known[0] for c in known)
    assert counts[-1] == 10


def test_levels_nondecreasing():
    levels = congruence_levels(fibonacci_presentation(3), 8)
    for lv in levels:
        assert list(lv.short_classes) == sorted(lv.short_classes)
        assert lv.classes == lv.short_classes[-1]
