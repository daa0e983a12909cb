"""Seeded random inputs for property checks and the CLI."""

from __future__ import annotations

import random
from typing import Optional

from dgw.diagrams import (Diagram, apply_atom, applicable_atoms, compose, invert,
                          reduce)
from dgw.isomorphisms import bfs_diagram
from dgw.presentations import Presentation, Word
from dgw.thompson import FWord


def random_fword(r: int, rng: random.Random, max_length: int = 12, max_index: int = 6) -> FWord:
    n = rng.randint(0, max_length)
    return FWord(r, tuple((rng.randint(0, max_index), rng.choice((1, -1))) for _ in range(n)))


def random_walk(p: Presentation, top: Word, n_atoms: int, rng: random.Random,
                max_word_len: Optional[int] = None, positive: bool = False) -> Diagram:
    """A derivation of up to ``n_atoms`` uniformly chosen applicable atoms."""
    w = tuple(top)
    atoms = []
    for _ in range(n_atoms):
        opts = []
        for a in applicable_atoms(p, w):
            if positive and a.dir < 0:
                continue
            if max_word_len is not None and len(apply_atom(p, w, a)) > max_word_len:
                continue
            opts.append(a)
        if not opts:
            break
        a = rng.choice(opts)
        atoms.append(a)
        w = apply_atom(p, w, a)
    return Diagram(p, tuple(top), tuple(atoms))


def random_word(p: Presentation, rng: random.Random, min_len: int = 1, max_len: int = 4) -> Word:
    return tuple(rng.randrange(len(p.alphabet)) for _ in range(rng.randint(min_len, max_len)))


def random_diagram(p: Presentation, rng: random.Random, max_atoms: int = 30,
                   max_word_len: int = 12) -> Diagram:
    """Random derivation from a random short word, biased towards containing dipoles.

    Half of the time the walk is followed by the mirror image of a partial
    walk from its bottom, which plants dipoles that are not adjacent in the
    atom list.
    """
    top = random_word(p, rng)
    n = rng.randint(0, max_atoms)
    if rng.random() < 0.5:
        return random_walk(p, top, n, rng, max_word_len)
    first = random_walk(p, top, n // 2, rng, max_word_len)
    back = random_walk(p, first.bottom, n - len(first.atoms), rng, max_word_len)
    if back.atoms:
        # re-walk part of the way back so that cells cancel against `back`
        k = rng.randint(0, len(back.atoms))
        partial = Diagram(p, back.top, back.atoms[:k])
        return compose(compose(first, partial), invert(partial))
    return first


def bfs_loops(p: Presentation, base: Word, count: int, rng: random.Random, depth: int = 8,
              walk_len: int = 6, max_word_len: int = 9, max_tries: int = 5000) -> list[Diagram]:
    """Distinct nontrivial reduced ``(base, base)``-diagrams built from searches.

    Two independent random walks from ``base`` are joined by a shortest
    derivation between their bottoms (found by breadth-first search within
    ``depth`` atoms); the loop is walk1, bridge, walk2 reversed.
    """
    found: dict = {}
    tries = 0
    while len(found) < count and tries < max_tries:
        tries += 1
        w1 = random_walk(p, base, rng.randint(1, walk_len), rng, max_word_len)
        w2 = random_walk(p, base, rng.randint(1, walk_len), rng, max_word_len)
        bridge = bfs_diagram(p, w1.bottom, w2.bottom, depth, max_len=max_word_len + 2)
        if bridge is None:
            continue
        d = reduce(compose(compose(w1, bridge), invert(w2)))
        if d.atoms and d.atoms not in found:
            found[d.atoms] = d
    return list(found.values())
