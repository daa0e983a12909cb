"""Diagram groups over semigroup presentations and generalized Thompson groups F_r."""

from dgw.diagrams import (Atom, Diagram, DiagramError, bottom, canon, compose, eps,
                          equal, invert, reduce, split, sum)
from dgw.presentations import Presentation, is_left_letter_form, parse_presentation

__all__ = [
    "Atom", "Diagram", "DiagramError", "Presentation", "bottom", "canon", "compose",
    "eps", "equal", "invert", "is_left_letter_form", "parse_presentation", "reduce",
    "split", "sum",
]
