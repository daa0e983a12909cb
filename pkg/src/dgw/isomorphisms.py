"""The isomorphisms between ``F_rprime`` and the diagram groups of the families.

``phi`` colours the vertices of a diagram over ``<x | x=x^rprime>``
alternately (the letter at an even position becomes ``a``, at an odd
position ``b``) and fills every cell with the basic diagram of its letter.

``psi`` goes back: split the reduced ``(a,a)``-diagram into a positive and
a negative half, insert dipoles until the middle word alternates, then peel
each half into basic diagrams from the top down.  Every basic diagram
becomes one cell over ``<x | x=x^rprime>``.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Optional

from dgw.diagrams import (Atom, Diagram, apply_atom, applicable_atoms, compose,
                          eps, invert, reduce, split)
from dgw.families import A, B, EVEN, IsoInstance, basic_atoms
from dgw.geometry import realize
from dgw.presentations import Presentation, Word
from dgw.thompson import pr


class IsoError(ValueError):
    pass


def relabel(word_len: int) -> Word:
    """The alternating word ``abab...`` of the given length."""
    return tuple(k % 2 for k in range(word_len))


def phi(inst: IsoInstance, d: Diagram) -> Diagram:
    """Image of a diagram over ``<x | x=x^rprime>`` in the target groupoid, reduced."""
    if d.presentation != pr(inst.rprime):
        raise IsoError(f"phi expects a diagram over {pr(inst.rprime)}")
    basics = {x: basic_atoms(inst, x) for x in (A, B)}
    atoms: list[Atom] = []
    n = len(d.top)
    for a in d.atoms:
        letter = a.offset % 2
        piece = basics[letter]
        if a.dir < 0:
            piece = tuple(b.inverse() for b in reversed(piece))
        atoms.extend(b.shifted(a.offset) for b in piece)
    out = Diagram(inst.target, relabel(n), tuple(atoms))
    if len(out.bottom) != len(d.bottom):
        raise IsoError("relabelling changed the word length")
    return reduce(out)


@dataclass(frozen=True)
class MiddleState:
    left: Diagram
    right: Diagram
    middle: Word
    insertions: int

    @property
    def alternations(self) -> int:
        """``m`` in the middle label ``a(ba)^m``."""
        return (len(self.middle) - 1) // 2

    def diagram(self) -> Diagram:
        return compose(self.left, invert(self.right))


def _default_cap(d: Diagram) -> int:
    env = os.environ.get("DGW_MAX_ITERS")
    if env:
        return int(env)
    return 10 * len(d.atoms) + 100


def _next_insertion(word: Word) -> Optional[int]:
    if word[0] == B:
        return 0
    for k in range(len(word) - 1):
        if word[k] == word[k + 1]:
            return k + 1
    return None


def normalize_middle(inst: IsoInstance, psi_d: Diagram, max_iters: Optional[int] = None) -> MiddleState:
    """Split a reduced (a,a)-diagram and insert dipoles until the middle word alternates.

    A middle word starting with ``b`` gets a dipole on its first letter;
    otherwise the second letter of the leftmost ``aa`` or ``bb`` is expanded.
    """
    p = inst.target
    cap = max_iters if max_iters is not None else _default_cap(psi_d)
    upper, lower = split(psi_d)
    left, right = list(upper.atoms), list(lower.atoms)
    word = upper.bottom
    steps = 0
    while (pos := _next_insertion(word)) is not None:
        steps += 1
        if steps > cap:
            raise IsoError(f"middle word did not become alternating within {cap} insertions")
        atom = Atom(p.lhs_relation(word[pos]), 1, pos)
        word = apply_atom(p, word, atom)
        left.append(atom)
        right.append(atom)
    if word[-1] != A:
        raise IsoError(f"alternating middle word {p.show(word)!r} does not end with a")
    return MiddleState(Diagram(p, upper.top, tuple(left)), Diagram(p, lower.top, tuple(right)), word, steps)


def decompose_basic(inst: IsoInstance, d: Diagram) -> tuple[Atom, ...]:
    """Peel a positive diagram with alternating bottom into basic diagrams.

    Returns forward atoms over ``<x | x=x^rprime>``, one per basic diagram,
    in pre-order (a basic before the basics hanging below it, left to right).
    """
    p = inst.target
    if len(d.top) != 1 or not d.is_positive:
        raise IsoError("decompose_basic needs a positive diagram with one-letter top")
    letter = d.top[0]
    bot = d.bottom
    if bot[0] != letter or bot[-1] != letter or any(x == y for x, y in zip(bot, bot[1:])):
        raise IsoError(f"bottom {p.show(bot)!r} is not alternating from {p.alphabet[letter]!r} to itself")
    g = realize(d)
    below = {c.top[0]: k for k, c in enumerate(g.cells)}
    used: set[int] = set()

    def take(e: int) -> int:
        k = below.get(e)
        if k is None:
            raise IsoError(f"edge {e} has no cell below it; the diagram is not built from basic diagrams")
        used.add(k)
        return k

    def basic_below(e: int) -> Optional[list[int]]:
        if e not in below:
            return None
        top_cell = g.cells[take(e)]
        if inst.kind == EVEN:
            partner = g.cells[take(top_cell.bottom[0])]
            return list(partner.bottom) + list(top_cell.bottom[1:])
        out: list[int] = []
        for child in top_cell.bottom:
            out.extend(g.cells[take(child)].bottom)
        return out

    frontier = [g.top_path[0]]
    atoms: list[Atom] = []
    stack = [frontier[0]]
    while stack:
        e = stack.pop()
        out = basic_below(e)
        if out is None:
            continue
        k = frontier.index(e)
        if g.edges[e].label != k % 2:
            raise IsoError(f"edge label at position {k} does not follow the alternating colouring")
        atoms.append(Atom(0, 1, k))
        frontier[k:k + 1] = out
        stack.extend(reversed(out))
    if len(used) != len(g.cells):
        raise IsoError("cells left over after peeling basic diagrams")
    if tuple(frontier) != g.bottom_path:
        raise IsoError("peeling did not reach the bottom path")
    return tuple(atoms)


def psi(inst: IsoInstance, d: Diagram, max_iters: Optional[int] = None) -> Diagram:
    """Preimage in ``F_rprime`` (over ``<x | x=x^rprime>``, base ``x``) of an (a,a)-diagram."""
    if d.presentation != inst.target:
        raise IsoError(f"psi expects a diagram over {inst.target}")
    if d.top != (A,) or d.bottom != (A,):
        raise IsoError("psi expects an (a,a)-diagram")
    state = normalize_middle(inst, reduce(d), max_iters)
    fp = pr(inst.rprime)
    upper = Diagram(fp, (0,), decompose_basic(inst, state.left))
    lower = Diagram(fp, (0,), decompose_basic(inst, state.right))
    return reduce(compose(upper, invert(lower)))


def bfs_diagram(p: Presentation, w1, w2, depth: int, max_len: Optional[int] = None) -> Optional[Diagram]:
    """A shortest derivation from ``w1`` to ``w2`` using at most ``depth`` atoms, or ``None``."""
    w1, w2 = tuple(w1), tuple(w2)
    if depth < 0:
        raise ValueError("depth must be non-negative")
    parent: dict[Word, Optional[tuple[Word, Atom]]] = {w1: None}
    queue = deque([(w1, 0)])
    while queue:
        w, k = queue.popleft()
        if w == w2:
            atoms = []
            while parent[w] is not None:
                w, a = parent[w]
                atoms.append(a)
            return Diagram(p, w1, tuple(reversed(atoms))) if atoms else eps(p, w1)
        if k == depth:
            continue
        for a in applicable_atoms(p, w):
            nxt = apply_atom(p, w, a)
            if nxt in parent or (max_len is not None and len(nxt) > max_len):
                continue
            parent[nxt] = (w, a)
            queue.append((nxt, k + 1))
    return None
