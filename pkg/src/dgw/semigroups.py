"""Bounded word problem and element counting for finitely presented semigroups.

Nothing here decides infinitude: a semigroup whose closure does not settle
within the bounds is reported as unknown, never as infinite.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Optional

from dgw.diagrams import Atom, Diagram, apply_atom, applicable_atoms, eps
from dgw.presentations import Presentation, Word

EQUAL = "equal"
UNEQUAL = "unequal-within-bound"
UNKNOWN = "unknown"

DEFAULT_MAX_LEN = 12
DEFAULT_MAX_STATES = 200_000


@dataclass(frozen=True)
class Verdict:
    kind: str
    max_len: int
    max_states: int
    derivation: Optional[Diagram] = None

    def __bool__(self):
        return self.kind == EQUAL

    def __str__(self):
        if self.kind == EQUAL:
            return EQUAL
        return f"{self.kind} (max_len={self.max_len}, max_states={self.max_states})"


def word_equal(p: Presentation, u, v, max_len: int = DEFAULT_MAX_LEN,
               max_states: int = DEFAULT_MAX_STATES) -> Verdict:
    """Bidirectional breadth-first search between ``u`` and ``v``.

    An ``equal`` verdict carries the derivation from ``u`` to ``v`` as a
    diagram.  ``unequal-within-bound`` means one side's closure among words
    of length at most ``max_len`` was exhausted without meeting the other.
    """
    if max_len < 1 or max_states < 1:
        raise ValueError("bounds must be positive")
    u, v = tuple(u), tuple(v)
    if u == v:
        return Verdict(EQUAL, max_len, max_states, eps(p, u))
    if len(u) > max_len or len(v) > max_len:
        return Verdict(UNKNOWN, max_len, max_states)
    seen = ({u: None}, {v: None})
    queues = (deque([u]), deque([v]))
    while queues[0] and queues[1]:
        side = 0 if len(queues[0]) <= len(queues[1]) else 1
        mine, other = seen[side], seen[1 - side]
        for _ in range(len(queues[side])):
            w = queues[side].popleft()
            for a in applicable_atoms(p, w):
                nxt = apply_atom(p, w, a)
                if len(nxt) > max_len or nxt in mine:
                    continue
                mine[nxt] = (w, a)
                if nxt in other:
                    return Verdict(EQUAL, max_len, max_states, _join(p, u, seen, nxt))
                if len(seen[0]) + len(seen[1]) > max_states:
                    return Verdict(UNKNOWN, max_len, max_states)
                queues[side].append(nxt)
    return Verdict(UNEQUAL, max_len, max_states)


def _join(p, u, seen, meet) -> Diagram:
    forward: list[Atom] = []
    w = meet
    while seen[0][w] is not None:
        w, a = seen[0][w]
        forward.append(a)
    forward.reverse()
    w = meet
    while seen[1][w] is not None:
        prev, a = seen[1][w]
        forward.append(a.inverse())
        w = prev
    return Diagram(p, u, tuple(forward))


class _UnionFind:
    def __init__(self):
        self.parent: list[int] = []
        self.minlen: list[int] = []

    def add(self, length: int) -> int:
        self.parent.append(len(self.parent))
        self.minlen.append(length)
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if x > y:
            x, y = y, x
        self.parent[y] = x
        self.minlen[x] = min(self.minlen[x], self.minlen[y])
        return True


@dataclass(frozen=True)
class ClosureLevel:
    """Closure state after adding all words of length ``length``.

    ``short_classes[m-1]`` is the number of classes containing some word of
    length at most ``m``.
    """
    length: int
    short_classes: tuple[int, ...]

    @property
    def classes(self) -> int:
        return self.short_classes[-1]


def congruence_levels(p: Presentation, max_len: int = DEFAULT_MAX_LEN,
                      max_states: int = DEFAULT_MAX_STATES) -> list[ClosureLevel]:
    """Congruence closure over all words of length ``1..L`` for growing ``L``.

    Each level adds every word of length ``L`` and unites it with the words
    of length at most ``L`` reachable by one relation application.  Levels
    stop before the total number of words would exceed ``max_states``.
    """
    k = len(p.alphabet)
    chars = "".join(chr(ord("a") + i) for i in range(k))
    rules = []
    for lhs, rhs in p.relations:
        ls = "".join(chars[x] for x in lhs)
        rs = "".join(chars[x] for x in rhs)
        rules += [(ls, rs), (rs, ls)]
    uf = _UnionFind()
    ids: dict[str, int] = {}
    levels: list[ClosureLevel] = []
    for length in range(1, max_len + 1):
        if len(ids) + k ** length > max_states:
            break
        level = ["".join(t) for t in itertools.product(chars, repeat=length)]
        for w in level:
            ids[w] = uf.add(length)
        for w in level:
            w_id = ids[w]
            # longer neighbours are united when their own level is added
            for old, new in rules:
                if len(new) > len(old):
                    continue
                start = w.find(old)
                while start >= 0:
                    uf.union(w_id, ids[w[:start] + new + w[start + len(old):]])
                    start = w.find(old, start + 1)
        hist = [0] * (length + 1)
        for root in {uf.find(i) for i in range(len(ids))}:
            hist[uf.minlen[root]] += 1
        levels.append(ClosureLevel(length, tuple(itertools.accumulate(hist[1:]))))
    return levels


def count_elements(p: Presentation, max_len: int = DEFAULT_MAX_LEN,
                   max_states: int = DEFAULT_MAX_STATES, window: int = 2) -> Optional[int]:
    """Number of elements of the presented semigroup, or ``None`` if the closure has not settled.

    At the last level the class counts restricted to words of length at
    most ``m``, ``m+1``, ..., ``m+window`` must agree, and the count for
    ``m`` must be the same one level earlier.  The smallest such ``m`` wins.
    """
    if max_len < 1 or max_states < 1:
        raise ValueError("bounds must be positive")
    levels = congruence_levels(p, max_len, max_states)
    if len(levels) < 2:
        return None
    last, prev = levels[-1].short_classes, levels[-2].short_classes
    for m in range(len(last) - window):
        plateau = last[m:m + window + 1]
        if len(set(plateau)) == 1 and m < len(prev) and prev[m] == last[m]:
            return last[m]
    return None
