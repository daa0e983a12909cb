"""Explicit planar realization of diagrams.

The graph is built by replaying the atoms against an edge frontier.  Every
atom consumes the frontier edges of its factor and installs fresh edges
(and fresh interior vertices) below them, so at each vertex the creation
order of outgoing edges, and likewise of incoming edges, is their
top-to-bottom rotation order.
"""

from __future__ import annotations

from dataclasses import dataclass

from dgw.diagrams import Diagram
from dgw.presentations import is_left_letter_form


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    label: int


@dataclass(frozen=True)
class Cell:
    rel: int
    dir: int
    top: tuple[int, ...]
    bottom: tuple[int, ...]


@dataclass(frozen=True)
class DiagramGraph:
    diagram: Diagram
    num_vertices: int
    edges: tuple[Edge, ...]
    cells: tuple[Cell, ...]
    outgoing: tuple[tuple[int, ...], ...]  # per vertex, top to bottom
    incoming: tuple[tuple[int, ...], ...]
    top_path: tuple[int, ...]
    bottom_path: tuple[int, ...]

    @property
    def iota(self) -> int:
        return 0

    @property
    def tau(self) -> int:
        return len(self.diagram.top)

    @property
    def vertices(self) -> range:
        return range(self.num_vertices)

    def euler_ok(self) -> bool:
        return self.num_vertices - len(self.edges) + len(self.cells) + 1 == 2

    def path_word(self, path) -> tuple[int, ...]:
        return tuple(self.edges[e].label for e in path)


def realize(d: Diagram) -> DiagramGraph:
    p = d.presentation
    n = len(d.top)
    nv = n + 1
    edges = [Edge(i, i + 1, x) for i, x in enumerate(d.top)]
    cells = []
    frontier = list(range(n))
    for a in d.atoms:
        old, new = p.side(a.rel, a.dir)
        consumed = frontier[a.offset:a.offset + len(old)]
        u, v = edges[consumed[0]].src, edges[consumed[-1]].dst
        chain = [u] + list(range(nv, nv + len(new) - 1)) + [v]
        nv += len(new) - 1
        fresh = []
        for k, x in enumerate(new):
            fresh.append(len(edges))
            edges.append(Edge(chain[k], chain[k + 1], x))
        cells.append(Cell(a.rel, a.dir, tuple(consumed), tuple(fresh)))
        frontier[a.offset:a.offset + len(old)] = fresh
    outgoing = [[] for _ in range(nv)]
    incoming = [[] for _ in range(nv)]
    for k, e in enumerate(edges):
        outgoing[e.src].append(k)
        incoming[e.dst].append(k)
    g = DiagramGraph(d, nv, tuple(edges), tuple(cells),
                     tuple(map(tuple, outgoing)), tuple(map(tuple, incoming)),
                     tuple(range(n)), tuple(frontier))
    assert g.path_word(g.top_path) == d.top and g.path_word(g.bottom_path) == d.bottom
    assert g.euler_ok()
    return g


def depths(g: DiagramGraph) -> dict[int, int]:
    """Depth of every edge of a positive diagram with a one-letter top.

    The top edge has depth 0 and the bottom edges of a cell lie one deeper
    than its top edge.
    """
    d = g.diagram
    if len(d.top) != 1 or not d.is_positive or not is_left_letter_form(d.presentation):
        raise GeometryError("depths needs a positive diagram with one-letter top over a left-letter presentation")
    depth = {0: 0}
    for c in g.cells:
        (t,) = c.top
        for e in c.bottom:
            depth[e] = depth[t] + 1
    return depth


def parity_violations(g: DiagramGraph) -> list[str]:
    """Vertices where the label/depth-parity alternation laws fail.

    Law 1: edges leaving (and, separately, entering) a vertex alternate in
    label and in depth parity from top to bottom.  Law 2: for the topmost
    incoming and topmost outgoing edge at a vertex, equal labels mean
    opposite parity and different labels mean equal parity.
    """
    dep = depths(g)
    bad = []
    for v in g.vertices:
        for kind, es in (("out", g.outgoing[v]), ("in", g.incoming[v])):
            for e, f in zip(es, es[1:]):
                if g.edges[e].label == g.edges[f].label or dep[e] % 2 == dep[f] % 2:
                    bad.append(f"law 1 at vertex {v} ({kind}): edges {e},{f}")
        if g.incoming[v] and g.outgoing[v]:
            e, f = g.incoming[v][0], g.outgoing[v][0]
            same_label = g.edges[e].label == g.edges[f].label
            same_parity = dep[e] % 2 == dep[f] % 2
            if same_label == same_parity:
                bad.append(f"law 2 at vertex {v}: edges {e},{f}")
    return bad


def render_dot(g: DiagramGraph) -> str:
    p = g.diagram.presentation
    lines = ["digraph diagram {", "  rankdir=LR;", "  node [shape=point];"]
    for v in g.vertices:
        extra = ' xlabel="iota"' if v == g.iota else (' xlabel="tau"' if v == g.tau else "")
        lines.append(f"  v{v} [id=v{v}{extra}];")
    for k, e in enumerate(g.edges):
        lines.append(f'  v{e.src} -> v{e.dst} [id=e{k} label="{p.alphabet[e.label]}"];')
    for k, c in enumerate(g.cells):
        top = " ".join(f"e{e}" for e in c.top)
        bot = " ".join(f"e{e}" for e in c.bottom)
        sign = "+" if c.dir > 0 else "-"
        lines.append(f"  // cell {k}: {sign}{c.rel} top [{top}] bottom [{bot}]")
    lines.append("}")
    return "\n".join(lines) + "\n"
