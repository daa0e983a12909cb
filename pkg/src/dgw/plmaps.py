"""Piecewise-linear maps induced by diagrams.

An ``(w1, w2)``-diagram induces an increasing PL bijection
``[0, |w1|] -> [0, |w2|]`` by following points from the top path through
the cells down to the bottom path; each cell maps its top path affinely
onto its bottom path.

Maps run from the top of a diagram to its bottom, so the map of
``compose(d1, d2)`` is "first ``f_d1``, then ``f_d2``", which is exactly
``compose_pl(f_d1, f_d2)``.  All arithmetic uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from dgw.diagrams import Diagram


class PLMapError(ValueError):
    pass


Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PLMap:
    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        if len(pts) < 2:
            raise PLMapError("a PL map needs at least two breakpoints")
        if pts[0] != (0, 0):
            raise PLMapError(f"a PL map must start at (0,0), got {pts[0]}")
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if not (x1 > x0 and y1 > y0):
                raise PLMapError("breakpoints must be strictly increasing in both coordinates")
        object.__setattr__(self, "points", pts)

    @property
    def domain(self) -> Fraction:
        return self.points[-1][0]

    @property
    def range(self) -> Fraction:
        return self.points[-1][1]

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        if not 0 <= t <= self.domain:
            raise PLMapError(f"{t} outside [0, {self.domain}]")
        pts = self.points
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if t <= x1:
                return y0 + (t - x0) * (y1 - y0) / (x1 - x0)
        raise AssertionError("unreachable")

    def inverse(self) -> "PLMap":
        return PLMap(tuple((y, x) for x, y in self.points))

    def slopes(self) -> list[Fraction]:
        return [(y1 - y0) / (x1 - x0) for (x0, y0), (x1, y1) in zip(self.points, self.points[1:])]

    def normalized(self) -> "PLMap":
        """Drop collinear breakpoints."""
        pts = [self.points[0]]
        for q, nxt in zip(self.points[1:], self.points[2:] + (None,)):
            if nxt is not None:
                (x0, y0), (x1, y1), (x2, y2) = pts[-1], q, nxt
                if (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0):
                    continue
            pts.append(q)
        return PLMap(tuple(pts))

    def unit(self) -> "PLMap":
        """Rescale domain and range to [0, 1]."""
        p, q = self.domain, self.range
        return PLMap(tuple((x / p, y / q) for x, y in self.points))

    def __str__(self):
        return " ".join(f"{_rat(x)}:{_rat(y)}" for x, y in self.points)

    @classmethod
    def parse(cls, text: str) -> "PLMap":
        pts = []
        for tok in text.split():
            if tok.count(":") != 1:
                raise PLMapError(f"bad breakpoint {tok!r}, expected x:y")
            x, y = tok.split(":")
            try:
                pts.append((Fraction(x), Fraction(y)))
            except (ValueError, ZeroDivisionError) as exc:
                raise PLMapError(f"bad rational in {tok!r}") from exc
        return cls(tuple(pts))


def _rat(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def identity(n) -> PLMap:
    return PLMap(((0, 0), (n, n)))


def _cell_map(total: int, offset: int, old: int, new: int) -> PLMap:
    pts = [(0, 0)]
    if offset > 0:
        pts.append((offset, offset))
    pts.append((offset + old, offset + new))
    if offset + old < total:
        pts.append((total, total - old + new))
    return PLMap(tuple(pts))


def compose_pl(f: PLMap, g: PLMap) -> PLMap:
    """The map ``t -> g(f(t))``."""
    if f.range != g.domain:
        raise PLMapError(f"range {f.range} of the first map differs from domain {g.domain} of the second")
    xs = {x for x, _ in f.points}
    finv = f.inverse()
    xs |= {finv(x) for x, _ in g.points}
    return PLMap(tuple((x, g(f(x))) for x in sorted(xs))).normalized()


def diagram_to_plmap(d: Diagram) -> PLMap:
    p = d.presentation
    f = identity(len(d.top))
    n = len(d.top)
    for a in d.atoms:
        old, new = p.side(a.rel, a.dir)
        f = compose_pl(f, _cell_map(n, a.offset, len(old), len(new)))
        n += len(new) - len(old)
    return f.normalized()


def pl_equal(f: PLMap, g: PLMap) -> bool:
    if f.domain != g.domain:
        raise PLMapError("maps have different domains")
    return f.normalized().points == g.normalized().points


def _is_power(v: Fraction, r: int) -> bool:
    if v <= 0:
        return False
    if v < 1:
        v = 1 / v
    if v.denominator != 1:
        return False
    n = v.numerator
    while n % r == 0:
        n //= r
    return n == 1


def _in_z_inv_r(v: Fraction, r: int) -> bool:
    d = v.denominator
    while (g := gcd(d, r)) > 1:
        d //= g
    return d == 1


def validate_fr(f: PLMap, r: int) -> bool:
    """Whether ``f`` (rescaled to [0,1]) has slopes in ``r^Z`` and breakpoints in ``Z[1/r]``."""
    u = f.unit()
    return (all(_is_power(s, r) for s in u.slopes())
            and all(_in_z_inv_r(x, r) and _in_z_inv_r(y, r) for x, y in u.points))
