"""Fibonacci and Johnson presentations, their two-letter forms, and basic diagrams.

An :class:`IsoInstance` pairs a two-letter target presentation with the
parameter ``rprime`` of the Thompson group ``F_rprime`` it is isomorphic to:

==================  ===============================  =============
family              target                           rprime
==================  ===============================  =============
fib3                a=bab, b=aba                     9
fib4                a=baba, b=abababab               11
johnson-odd(s)      a=b(ab)^s, b=a(ba)^s             (2s+1)^2
johnson-even(s)     a=(ba)^s, b=(ab)^s               4s-1
==================  ===============================  =============

The two-letter forms are written down directly; the Tietze moves relating
them to the cyclic presentations are not performed.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass

from dgw.diagrams import Atom, Diagram
from dgw.presentations import Letter, Presentation, Word

A, B = 0, 1
ODD, EVEN = "odd", "even"
FAMILIES = ("fib3", "fib4", "johnson-odd", "johnson-even")


class FamilyError(ValueError):
    pass


def _cyclic(n: int, r: int) -> Presentation:
    names = ("x",) if n == 1 else tuple(string.ascii_lowercase[:n])
    rels = tuple(((i,), tuple((i + k) % n for k in range(1, r + 1))) for i in range(n))
    return Presentation(names, rels)


def fibonacci_presentation(n: int) -> Presentation:
    """``<a_1..a_n | a_i = a_{i+1} a_{i+2}>`` with cyclic indices (``x`` when n=1)."""
    if n < 1:
        raise FamilyError(f"n must be at least 1, got {n}")
    if n > 26:
        raise FamilyError("at most 26 letters are supported")
    return _cyclic(n, 2)


def johnson_presentation(n: int, r: int) -> Presentation:
    """``<a_1..a_n | a_i = a_{i+1} ... a_{i+r}>`` with cyclic indices."""
    if n < 1 or r < 2:
        raise FamilyError(f"need n >= 1 and r >= 2, got n={n}, r={r}")
    if n > 26:
        raise FamilyError("at most 26 letters are supported")
    return _cyclic(n, r)


def _alt(first: Letter, length: int) -> Word:
    return tuple((first + k) % 2 for k in range(length))


@dataclass(frozen=True)
class IsoInstance:
    family: str
    target: Presentation
    rprime: int
    s: int | None = None
    r: int | None = None

    @property
    def kind(self) -> str:
        return EVEN if self.family in ("fib4", "johnson-even") else ODD

    @property
    def name(self) -> str:
        return self.family if self.s is None else f"{self.family}:{self.s}"

    def __str__(self):
        return f"{self.name} {self.target} F_{self.rprime}"


def instance(family: str, param: int | None = None) -> IsoInstance:
    ab = ("a", "b")
    if family == "fib3":
        return IsoInstance("fib3", Presentation(ab, (((A,), _alt(B, 3)), ((B,), _alt(A, 3)))), 9, r=3)
    if family == "fib4":
        return IsoInstance("fib4", Presentation(ab, (((A,), _alt(B, 4)), ((B,), _alt(A, 8)))), 11)
    if family in ("johnson-odd", "johnson-even"):
        if param is None or param < 1:
            raise FamilyError(f"{family} needs a positive parameter s, got {param}")
        s = param
        if family == "johnson-odd":
            r = 2 * s + 1
            rels = (((A,), _alt(B, r)), ((B,), _alt(A, r)))
            return IsoInstance(family, Presentation(ab, rels), r * r, s=s, r=r)
        r = 2 * s
        rels = (((A,), _alt(B, r)), ((B,), _alt(A, r)))
        return IsoInstance(family, Presentation(ab, rels), 4 * s - 1, s=s, r=r)
    raise FamilyError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def parse_instance(text: str) -> IsoInstance:
    """Accept ``fib3``, ``fib4``, ``johnson-odd:2``, ``johnson-even(1)`` or ``johnson-even-1``."""
    m = re.fullmatch(r"\s*([a-z0-9-]+?)(?:[:(-](\d+)\)?)?\s*", text)
    if not m:
        raise FamilyError(f"cannot parse instance {text!r}")
    fam, s = m.group(1), m.group(2)
    return instance(fam, int(s) if s is not None else None)


def basic_atoms(inst: IsoInstance, letter: Letter) -> tuple[Atom, ...]:
    """Atoms of the basic diagram with one-letter top ``letter`` (offset 0)."""
    p = inst.target
    first = p.lhs_relation(letter)
    if inst.kind == EVEN:
        rhs = p.relations[first][1]
        return (Atom(first, 1, 0), Atom(p.lhs_relation(rhs[0]), 1, 0))
    rhs = p.relations[first][1]
    r = len(rhs)
    atoms = [Atom(first, 1, 0)]
    for i, x in enumerate(rhs):
        atoms.append(Atom(p.lhs_relation(x), 1, i * r))
    return tuple(atoms)


def basic_diagram(inst: IsoInstance, letter: Letter, offset: int, top: Word) -> Diagram:
    """The basic diagram for ``letter`` placed at ``offset`` inside ``top``."""
    top = tuple(top)
    if not 0 <= offset < len(top) or top[offset] != letter:
        raise FamilyError(f"letter {letter} is not at offset {offset} of the top word")
    return Diagram(inst.target, top, tuple(a.shifted(offset) for a in basic_atoms(inst, letter)))


def basic_bottom(inst: IsoInstance, letter: Letter) -> Word:
    return Diagram(inst.target, (letter,), basic_atoms(inst, letter)).bottom
