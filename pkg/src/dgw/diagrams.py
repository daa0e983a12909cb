"""Semigroup diagrams encoded as derivations.

A diagram is a top word together with an ordered list of atoms; each atom
applies one relation (forward ``lhs -> rhs`` or backward ``rhs -> lhs``) at a
letter offset of the current word.  Two derivations describe isotopic
diagrams exactly when one can be turned into the other by swapping adjacent
atoms whose supports in the shared intermediate word are disjoint.

Concatenation, sum and mirror image are list operations.  Canonical forms,
dipole cancellation and the positive/negative split work on the planar
incidence structure (cells consuming and producing edges) recovered by
replaying the atoms.
"""

from __future__ import annotations

import builtins
import random
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional

from dgw.presentations import Presentation, Word, is_left_letter_form


class DiagramError(ValueError):
    """Raised when a derivation does not replay or operands do not fit."""


class Atom(NamedTuple):
    rel: int
    dir: int  # +1 forward (lhs -> rhs), -1 backward
    offset: int

    def inverse(self) -> "Atom":
        return Atom(self.rel, -self.dir, self.offset)

    def shifted(self, k: int) -> "Atom":
        return Atom(self.rel, self.dir, self.offset + k)

    def __str__(self):
        return f"{'+' if self.dir > 0 else '-'}{self.rel}@{self.offset}"

    @classmethod
    def parse(cls, text: str) -> "Atom":
        t = text.strip()
        if len(t) < 4 or t[0] not in "+-" or "@" not in t:
            raise DiagramError(f"malformed atom {text!r}")
        rel, off = t[1:].split("@", 1)
        if not (rel.isdigit() and off.isdigit()):
            raise DiagramError(f"malformed atom {text!r}")
        return cls(int(rel), 1 if t[0] == "+" else -1, int(off))


def apply_atom(p: Presentation, word: Word, atom: Atom) -> Word:
    if not 0 <= atom.rel < len(p.relations) or atom.dir not in (1, -1):
        raise DiagramError(f"atom {atom} does not name a relation of {p}")
    old, new = p.side(atom.rel, atom.dir)
    k = atom.offset
    if k < 0 or tuple(word[k:k + len(old)]) != old:
        raise DiagramError(
            f"atom {atom} does not match {p.show(word)!r}: expected {p.show(old)!r} at {k}")
    return word[:k] + new + word[k + len(old):]


def applicable_atoms(p: Presentation, word: Word) -> Iterator[Atom]:
    """All atoms that apply to ``word``, forward before backward, by relation then offset."""
    for d in (1, -1):
        for k in range(len(p.relations)):
            old, _ = p.side(k, d)
            n = len(old)
            for i in range(len(word) - n + 1):
                if word[i:i + n] == old:
                    yield Atom(k, d, i)


@dataclass(frozen=True)
class Diagram:
    presentation: Presentation
    top: Word
    atoms: tuple[Atom, ...] = ()
    bottom: Word = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not self.top:
            raise DiagramError("diagram top word must be nonempty")
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "atoms", tuple(Atom(*a) for a in self.atoms))
        w = self.top
        for a in self.atoms:
            w = apply_atom(self.presentation, w, a)
        object.__setattr__(self, "bottom", w)

    def __len__(self):
        return len(self.atoms)

    @property
    def is_positive(self) -> bool:
        return all(a.dir > 0 for a in self.atoms)

    def words(self) -> list[Word]:
        """The sequence of words visited by the derivation, top first."""
        out = [self.top]
        for a in self.atoms:
            out.append(apply_atom(self.presentation, out[-1], a))
        return out

    def __str__(self):
        return format_diagram(self)


def format_diagram(d: Diagram) -> str:
    lines = [f"base: {d.presentation.show(d.top)}"]
    lines += [str(a) for a in d.atoms]
    return "\n".join(lines) + "\n"


def parse_diagram(text: str, p: Presentation) -> Diagram:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("base:"):
        raise DiagramError("diagram text must start with 'base: <word>'")
    top = p.word(lines[0][len("base:"):].strip())
    return Diagram(p, top, tuple(Atom.parse(ln) for ln in lines[1:]))


def eps(p: Presentation, w) -> Diagram:
    if not w:
        raise DiagramError("eps needs a nonempty word")
    return Diagram(p, tuple(w), ())


def bottom(d: Diagram) -> Word:
    return d.bottom


def compose(d1: Diagram, d2: Diagram) -> Diagram:
    """Concatenate ``d1`` above ``d2``; no cancellation is performed."""
    if d1.presentation != d2.presentation:
        raise DiagramError("cannot compose diagrams over different presentations")
    if d1.bottom != d2.top:
        p = d1.presentation
        raise DiagramError(f"label mismatch: bottom {p.show(d1.bottom)!r} vs top {p.show(d2.top)!r}")
    return Diagram(d1.presentation, d1.top, d1.atoms + d2.atoms)


def sum(d1: Diagram, d2: Diagram) -> Diagram:  # noqa: A001 - mirrors the diagram operation name
    """Place ``d2`` to the right of ``d1``."""
    if d1.presentation != d2.presentation:
        raise DiagramError("cannot add diagrams over different presentations")
    k = len(d1.bottom)
    return Diagram(d1.presentation, d1.top + d2.top,
                   d1.atoms + tuple(a.shifted(k) for a in d2.atoms))


def invert(d: Diagram) -> Diagram:
    return Diagram(d.presentation, d.bottom, tuple(a.inverse() for a in reversed(d.atoms)))


class _Cell:
    __slots__ = ("rel", "dir", "inputs", "outputs")

    def __init__(self, rel, dir, inputs, outputs):
        self.rel = rel
        self.dir = dir
        self.inputs = inputs
        self.outputs = outputs


class _Net:
    """Mutable cell/edge incidence structure of a diagram."""

    def __init__(self, d: Diagram):
        p = d.presentation
        self.presentation = p
        self.top_word = d.top
        self.label: list[int] = list(d.top)
        self.top = list(range(len(d.top)))
        self.cells: dict[int, _Cell] = {}
        self.producer: dict[int, int] = {}
        self.consumer: dict[int, int] = {}
        frontier = list(self.top)
        for cid, a in enumerate(d.atoms):
            old, new = p.side(a.rel, a.dir)
            ins = frontier[a.offset:a.offset + len(old)]
            outs = list(range(len(self.label), len(self.label) + len(new)))
            self.label.extend(new)
            self.cells[cid] = _Cell(a.rel, a.dir, ins, outs)
            for e in ins:
                self.consumer[e] = cid
            for e in outs:
                self.producer[e] = cid
            frontier[a.offset:a.offset + len(old)] = outs
        self.bottom = frontier
        self.bottom_pos = {e: i for i, e in enumerate(frontier)}

    def partner(self, b: int) -> Optional[int]:
        """The cell forming a dipole directly above cell ``b``, if any."""
        cb = self.cells[b]
        a = self.producer.get(cb.inputs[0])
        if a is None:
            return None
        ca = self.cells[a]
        if ca.rel == cb.rel and ca.dir == -cb.dir and ca.outputs == cb.inputs:
            return a
        return None

    def cancel(self, a: int, b: int) -> list[int]:
        """Cancel the dipole (a above b); return cells whose neighbourhood changed."""
        ca, cb = self.cells.pop(a), self.cells.pop(b)
        touched = []
        for e in ca.outputs:
            del self.producer[e]
            del self.consumer[e]
        for up, down in zip(ca.inputs, cb.outputs):
            assert self.label[up] == self.label[down]
            del self.producer[down]
            c = self.consumer.pop(down, None)
            if c is None:
                i = self.bottom_pos.pop(down)
                self.bottom[i] = up
                self.bottom_pos[up] = i
                del self.consumer[up]
            else:
                ins = self.cells[c].inputs
                ins[ins.index(down)] = up
                self.consumer[up] = c
                touched.append(c)
        return touched

    def linearize(self, phases=(None,)) -> tuple[Atom, ...]:
        """Leftmost-greedy linear extension of the cell order.

        ``phases`` is a sequence of direction filters (``+1``, ``-1`` or
        ``None`` for any); each phase fires admissible cells until none is
        available.  Raises if some cell never fires.
        """
        p = self.presentation
        pending = {c: builtins.sum(1 for e in cell.inputs if e in self.producer)
                   for c, cell in self.cells.items()}
        maxlen = max((len(c.inputs) for c in self.cells.values()), default=1)
        frontier = list(self.top)
        atoms: list[Atom] = []
        fired = set()
        for want in phases:
            start = 0
            while True:
                hit = None
                for i in range(start, len(frontier)):
                    c = self.consumer.get(frontier[i])
                    if c is None or pending[c] or c in fired:
                        continue
                    cell = self.cells[c]
                    if cell.inputs[0] != frontier[i] or (want is not None and cell.dir != want):
                        continue
                    hit = (i, c)
                    break
                if hit is None:
                    break
                i, c = hit
                cell = self.cells[c]
                n = len(cell.inputs)
                if frontier[i:i + n] != cell.inputs:
                    raise DiagramError("cell inputs are not contiguous on the frontier")
                frontier[i:i + n] = cell.outputs
                fired.add(c)
                atoms.append(Atom(cell.rel, cell.dir, i))
                for e in cell.outputs:
                    nxt = self.consumer.get(e)
                    if nxt is not None:
                        pending[nxt] -= 1
                start = max(0, i - maxlen + 1)
        if len(fired) != len(self.cells):
            raise DiagramError("cells could not be ordered as requested")
        assert [self.label[e] for e in frontier] == [self.label[e] for e in self.bottom]
        return tuple(atoms)

    def has_dipole(self) -> bool:
        return any(self.partner(c) is not None for c in self.cells)


def canon(d: Diagram) -> Diagram:
    """Canonical representative of the isotopy class of ``d``.

    Among the cells that can be moved to the front, the one with the
    smallest offset goes first; repeat.
    """
    return Diagram(d.presentation, d.top, _Net(d).linearize())


def reduce(d: Diagram, rng: Optional[random.Random] = None) -> Diagram:
    """Cancel all dipoles and return the canonical irreducible diagram.

    With ``rng`` the dipole to cancel is picked at random at every step;
    the result does not depend on the order.
    """
    net = _Net(d)
    work = list(net.cells)
    queued = set(work)
    while work:
        if rng is not None:
            j = rng.randrange(len(work))
            work[j], work[-1] = work[-1], work[j]
        b = work.pop()
        queued.discard(b)
        if b not in net.cells:
            continue
        a = net.partner(b)
        if a is None:
            continue
        for c in net.cancel(a, b):
            if c not in queued:
                queued.add(c)
                work.append(c)
    return Diagram(d.presentation, d.top, net.linearize())


def is_reduced(d: Diagram) -> bool:
    return not _Net(d).has_dipole()


def equal(d1: Diagram, d2: Diagram) -> bool:
    """Equality in the diagram groupoid: same irreducible form."""
    if d1.presentation != d2.presentation:
        raise DiagramError("cannot compare diagrams over different presentations")
    if d1.top != d2.top or d1.bottom != d2.bottom:
        return False
    return reduce(d1).atoms == reduce(d2).atoms


def isotopic(d1: Diagram, d2: Diagram) -> bool:
    return d1.presentation == d2.presentation and d1.top == d2.top and canon(d1).atoms == canon(d2).atoms


def split(d: Diagram) -> tuple[Diagram, Diagram]:
    """Write an irreducible diagram as ``compose(d1, invert(d2))`` with both halves positive.

    The common bottom word of ``d1`` and ``d2`` labels the longest positive
    path from the left to the right end of ``d``.
    """
    p = d.presentation
    if not is_left_letter_form(p):
        raise DiagramError("split needs relations of the form a=A with distinct left letters")
    net = _Net(d)
    if net.has_dipole():
        raise DiagramError("split needs an irreducible diagram")
    try:
        atoms = net.linearize(phases=(1, -1))
    except DiagramError as exc:
        raise DiagramError("irreducible diagram has a positive cell below a negative one") from exc
    k = builtins.sum(1 for a in atoms if a.dir > 0)
    if any(a.dir < 0 for a in atoms[:k]):
        raise DiagramError("reordering failed")
    upper = Diagram(p, d.top, atoms[:k])
    lower = Diagram(p, upper.bottom, atoms[k:])
    return upper, invert(lower)
