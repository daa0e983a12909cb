"""Semigroup presentations and their text format.

Letters are integer indices into the alphabet; words are tuples of letters.
The text grammar is::

    <a,b | a=bab, b=aba>

with single ASCII letters as symbol names and ``a^3`` accepted as shorthand
for ``aaa`` on input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

Letter = int
Word = tuple[int, ...]


class PresentationError(ValueError):
    """Raised for malformed presentation text or invalid presentations."""


@dataclass(frozen=True)
class Presentation:
    alphabet: tuple[str, ...]
    relations: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        if len(set(self.alphabet)) != len(self.alphabet):
            raise PresentationError(f"duplicate symbol names in {self.alphabet}")
        for name in self.alphabet:
            if len(name) != 1 or not name.isascii() or not name.isalpha():
                raise PresentationError(f"symbol name must be a single ASCII letter, got {name!r}")
        n = len(self.alphabet)
        for k, (lhs, rhs) in enumerate(self.relations):
            if not lhs or not rhs:
                raise PresentationError(f"relation {k} has an empty side")
            for x in lhs + rhs:
                if not 0 <= x < n:
                    raise PresentationError(f"relation {k} uses letter index {x} outside the alphabet")

    def word(self, text: str) -> Word:
        """Parse a word such as ``"ab^2a"`` into letter indices."""
        return _parse_word(text, {c: i for i, c in enumerate(self.alphabet)}, 0)

    def show(self, word) -> str:
        return "".join(self.alphabet[x] for x in word)

    def side(self, rel: int, dir: int) -> tuple[Word, Word]:
        """Return (consumed, produced) words for applying ``rel`` in direction ``dir``."""
        lhs, rhs = self.relations[rel]
        return (lhs, rhs) if dir > 0 else (rhs, lhs)

    def lhs_relation(self, letter: Letter) -> int:
        """Index of the relation whose left side is the single letter ``letter``."""
        for k, (lhs, _) in enumerate(self.relations):
            if lhs == (letter,):
                return k
        raise PresentationError(f"no relation with left side {self.alphabet[letter]!r}")

    def __str__(self):
        rels = ", ".join(f"{self.show(l)}={self.show(r)}" for l, r in self.relations)
        return f"<{','.join(self.alphabet)} | {rels}>"


_NAME = re.compile(r"[A-Za-z]")


def _parse_word(text: str, index: dict[str, int], base: int) -> Word:
    out: list[int] = []
    i = 0
    s = text
    while i < len(s):
        c = s[i]
        if c.isspace():
            i += 1
            continue
        if not _NAME.fullmatch(c):
            raise PresentationError(f"unexpected {c!r} at position {base + i}")
        if c not in index:
            raise PresentationError(f"unknown symbol {c!r} at position {base + i}")
        i += 1
        power = 1
        j = i
        while j < len(s) and s[j].isspace():
            j += 1
        if j < len(s) and s[j] == "^":
            j += 1
            while j < len(s) and s[j].isspace():
                j += 1
            k = j
            while k < len(s) and s[k].isdigit():
                k += 1
            if k == j:
                raise PresentationError(f"expected exponent at position {base + j}")
            power = int(s[j:k])
            if power < 1:
                raise PresentationError(f"exponent must be positive at position {base + j}")
            i = k
        out.extend([index[c]] * power)
    return tuple(out)


def parse_presentation(text: str) -> Presentation:
    """Parse ``<a,b | a=bab, b=aba>`` into a :class:`Presentation`.

    Errors carry the character position where parsing failed.
    """
    s = text
    lt = s.find("<")
    if lt < 0 or s[:lt].strip():
        raise PresentationError("expected '<' at position 0")
    gt = s.rfind(">")
    if gt < 0:
        raise PresentationError(f"expected '>' at position {len(s)}")
    if s[gt + 1:].strip():
        raise PresentationError(f"trailing text at position {gt + 1}")
    bar = s.find("|", lt)
    if bar < 0 or bar > gt:
        raise PresentationError(f"expected '|' at position {gt}")

    alphabet = []
    pos = lt + 1
    for chunk in s[lt + 1:bar].split(","):
        name = chunk.strip()
        if not name:
            raise PresentationError(f"empty symbol name at position {pos}")
        if not (len(name) == 1 and _NAME.fullmatch(name)):
            raise PresentationError(f"symbol name must be a single ASCII letter at position {pos}: {name!r}")
        alphabet.append(name)
        pos += len(chunk) + 1
    index = {c: i for i, c in enumerate(alphabet)}
    if len(index) != len(alphabet):
        raise PresentationError("duplicate symbol names")

    relations = []
    pos = bar + 1
    for chunk in s[bar + 1:gt].split(","):
        if chunk.count("=") != 1:
            raise PresentationError(f"relation must contain exactly one '=' at position {pos}")
        left, right = chunk.split("=")
        lw = _parse_word(left, index, pos)
        rw = _parse_word(right, index, pos + len(left) + 1)
        if not lw or not rw:
            raise PresentationError(f"empty relation side at position {pos}")
        relations.append((lw, rw))
        pos += len(chunk) + 1
    return Presentation(tuple(alphabet), tuple(relations))


def is_left_letter_form(p: Presentation) -> bool:
    """True when every relation is ``a=A`` with ``|A| >= 2`` and the left letters are distinct."""
    lefts = []
    for lhs, rhs in p.relations:
        if len(lhs) != 1 or len(rhs) < 2:
            return False
        lefts.append(lhs[0])
    return len(set(lefts)) == len(lefts)
