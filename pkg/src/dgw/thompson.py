"""Generalized Thompson groups F_r as diagram groups over ``<x | x=x^r>``.

Words in the generators use the text form ``x0 x3 X2 x1`` (capital ``X`` for
inverses).  A word ``x_{i1} x_{i2} ...`` is represented by the diagram
``g(i1) o g(i2) o ...`` where ``g(i)`` is :func:`generator`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from dgw.diagrams import Atom, Diagram, compose, eps, equal, invert, reduce
from dgw.presentations import Presentation


class ThompsonError(ValueError):
    pass


@lru_cache(maxsize=None)
def pr(r: int) -> Presentation:
    """The presentation ``<x | x = x^r>``."""
    if r < 2:
        raise ThompsonError(f"r must be at least 2, got {r}")
    return Presentation(("x",), (((0,), (0,) * r),))


@dataclass(frozen=True)
class FWord:
    r: int
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.r < 2:
            raise ThompsonError(f"r must be at least 2, got {self.r}")
        object.__setattr__(self, "factors", tuple((int(i), int(s)) for i, s in self.factors))
        for i, s in self.factors:
            if i < 0 or s not in (1, -1):
                raise ThompsonError(f"bad factor {(i, s)}")

    def __len__(self):
        return len(self.factors)

    def inverse(self) -> "FWord":
        return FWord(self.r, tuple((i, -s) for i, s in reversed(self.factors)))

    def __mul__(self, other: "FWord") -> "FWord":
        if other.r != self.r:
            raise ThompsonError("cannot multiply words of different F_r")
        return FWord(self.r, self.factors + other.factors)

    def __str__(self):
        return " ".join(("x" if s > 0 else "X") + str(i) for i, s in self.factors)

    @classmethod
    def parse(cls, r: int, text: str) -> "FWord":
        factors = []
        for tok in text.split():
            m = re.fullmatch(r"([xX])(\d+)", tok)
            if not m:
                raise ThompsonError(f"bad generator token {tok!r}")
            factors.append((int(m.group(2)), 1 if m.group(1) == "x" else -1))
        return cls(r, tuple(factors))


def _vine(r: int, n: int) -> list[Atom]:
    # n successive expansions of the last letter
    return [Atom(0, 1, (r - 1) * k) for k in range(n)]


@lru_cache(maxsize=None)
def generator(r: int, i: int) -> Diagram:
    """Reduced (x,x)-diagram of the generator ``x_i`` of F_r (``2i+4`` cells)."""
    if i < 0:
        raise ThompsonError(f"generator index must be non-negative, got {i}")
    p = pr(r)
    upper = Diagram(p, (0,), tuple(_vine(r, i + 1)) + (Atom(0, 1, i),))
    lower = Diagram(p, (0,), tuple(_vine(r, i + 2)))
    return reduce(compose(upper, invert(lower)))


def word_to_diagram(r: int, w: FWord) -> Diagram:
    if w.r != r:
        raise ThompsonError(f"word over F_{w.r} used as F_{r}")
    d = eps(pr(r), (0,))
    for i, s in w.factors:
        g = generator(r, i)
        d = reduce(compose(d, g if s > 0 else invert(g)))
    return d


def relation_holds(r: int, i: int, j: int) -> bool:
    """Check ``x_j x_i = x_i x_{j+r-1}`` for ``i < j`` on reduced diagrams."""
    if i >= j:
        raise ThompsonError(f"relation needs i < j, got i={i}, j={j}")
    lhs = compose(generator(r, j), generator(r, i))
    rhs = compose(generator(r, i), generator(r, j + r - 1))
    return equal(lhs, rhs)


def _seminormal(r: int, f: list[tuple[int, int]]) -> list[tuple[int, int]]:
    # positive letters sorted ascending to the left, negatives descending to the right
    f = list(f)
    changed = True
    while changed:
        changed = False
        k = 0
        while k < len(f) - 1:
            (a, s), (b, t) = f[k], f[k + 1]
            if a == b and s == -t:
                del f[k:k + 2]
                k = max(k - 1, 0)
                changed = True
                continue
            new = None
            if s > 0 and t > 0 and b < a:
                new = [(b, 1), (a + r - 1, 1)]
            elif s < 0 and t > 0 and b < a:
                new = [(b, 1), (a + r - 1, -1)]
            elif s < 0 and t > 0 and a < b:
                new = [(b + r - 1, 1), (a, -1)]
            elif s < 0 and t < 0 and a < b:
                new = [(b + r - 1, -1), (a, -1)]
            if new is not None:
                f[k:k + 2] = new
                k = max(k - 1, 0)
                changed = True
            else:
                k += 1
    return f


def _bad_pair(r: int, f: list[tuple[int, int]]):
    split_at = next((k for k, (_, s) in enumerate(f) if s < 0), len(f))
    pos, neg = f[:split_at], f[split_at:]
    for i in sorted({i for i, _ in pos} & {i for i, _ in neg}, reverse=True):
        a = max(k for k, (j, _) in enumerate(pos) if j == i)
        b = split_at + min(k for k, (j, _) in enumerate(neg) if j == i)
        if not any(i < j < i + r for j, _ in f[a + 1:b]):
            return a, b
    return None


def normal_form(r: int, w: FWord, check: bool = True) -> FWord:
    """Standard normal form ``x_{i1}..x_{im} X_{jn}..X_{j1}`` with sorted index blocks.

    Whenever ``x_i`` and ``X_i`` both occur, some index in ``i+1..i+r-1``
    occurs between them.  With ``check`` the result is compared with the
    input on reduced diagrams and a mismatch raises.
    """
    if w.r != r:
        raise ThompsonError(f"word over F_{w.r} used as F_{r}")
    f = _seminormal(r, list(w.factors))
    while (bad := _bad_pair(r, f)) is not None:
        a, b = bad
        f = f[:a] + [(j - (r - 1), s) for j, s in f[a + 1:b]] + f[b + 1:]
        f = _seminormal(r, f)
    out = FWord(r, tuple(f))
    if check and not equal(word_to_diagram(r, w), word_to_diagram(r, out)):
        raise ThompsonError(f"normal form {out} of {w} disagrees with the diagram calculus")
    return out
