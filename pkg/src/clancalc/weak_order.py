"""
The weak order graph on orbit clans, and expansion of orbit-closure classes
in the Schubert basis.

Vertices are the clans of the chosen type and rank; there is an edge from
gamma to s_i . gamma, labeled i, whenever the action moves gamma, and the
edge is double exactly when the fired case was the type C crossing-arcs swap
("c4").  Every edge raises orbit dimension by one, so all paths from a
vertex to the dense-orbit clan have the same length: the codimension, which
is computed here by breadth-first search from the top along reversed edges.

The class of the orbit closure of gamma expands as a sum over the length-d
Weyl elements (d the codimension) whose word-action carries gamma to the
top; each such element contributes 2^(number of double edges on the path).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .action import act_simple, act_word
from .clans import Clan, dense_orbit_clan, enumerate_clans, parse_clan
from .weyl import SignedPermutation, enumerate_by_length, reduced_word


@dataclass(frozen=True)
class Edge:
    source: Clan
    target: Clan
    label: int
    double: bool


@dataclass(frozen=True)
class WeakOrderGraph:
    group: str
    rank: int
    vertices: tuple[Clan, ...]
    edges: tuple[Edge, ...]
    top: Clan
    codim: Mapping[Clan, int]

    def outgoing(self, clan: Clan) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.source == clan)


@dataclass(frozen=True)
class BrionDecomposition:
    source: Clan
    codimension: int
    terms: Mapping[SignedPermutation, int]


@lru_cache(maxsize=None)
def build_graph(group: str, n: int) -> WeakOrderGraph:
    """Build the full weak order graph for the rank-n group of a given type.

    >>> g = build_graph("C", 2)
    >>> str(g.top), len(g.vertices)
    ('1,2,2,1', 11)
    """
    vertices = enumerate_clans(group, n)
    edges = []
    for clan in vertices:
        for i in range(1, n + 1):
            step = act_simple(group, i, clan)
            if step.moved:
                edges.append(Edge(clan, step.result, i, step.is_double))
    top = dense_orbit_clan(group, n)
    incoming: dict[Clan, list[Clan]] = {v: [] for v in vertices}
    for edge in edges:
        incoming[edge.target].append(edge.source)
    codim = {top: 0}
    queue = deque([top])
    while queue:
        here = queue.popleft()
        for src in incoming[here]:
            if src not in codim:
                codim[src] = codim[here] + 1
                queue.append(src)
    if len(codim) != len(vertices):
        missing = [v for v in vertices if v not in codim]
        raise RuntimeError(f"vertices cannot reach the dense orbit: {missing}")
    return WeakOrderGraph(group, n, vertices, tuple(edges), top, codim)


def brion_decomposition(clan: Clan, graph: WeakOrderGraph) -> BrionDecomposition:
    """Expand the orbit-closure class of ``clan`` in the Schubert basis: the
    coefficient of w is 2^(double edges) over the length-codim elements whose
    action reaches the top, and 0 for every other w.

    >>> g = build_graph("D", 3)
    >>> dec = brion_decomposition(enumerate_clans("D", 3)[0], g)
    >>> all(coeff == 1 for coeff in dec.terms.values())
    True
    """
    if clan not in graph.codim:
        raise ValueError(f"clan {clan} is not a vertex of this graph")
    d = graph.codim[clan]
    terms: dict[SignedPermutation, int] = {}
    for w in enumerate_by_length(graph.group, graph.rank, d):
        final, doubles = act_word(graph.group, reduced_word(w), clan)
        if final == graph.top:
            if graph.group == "D":
                assert doubles == 0, f"double edge in a type D computation: {w}"
            terms[w] = 2**doubles
    return BrionDecomposition(clan, d, terms)


def export_dot(graph: WeakOrderGraph) -> str:
    """Deterministic DOT rendering; the dense orbit is marked and double
    edges carry a ``double`` attribute.
    """
    lines = [f'digraph "{graph.group}{graph.rank}_weak_order" {{']
    for clan in sorted(graph.vertices, key=str):
        attrs = f' [codim={graph.codim[clan]}'
        if clan == graph.top:
            attrs += ", dense=true, peripheries=2"
        lines.append(f'  "{clan}"{attrs}];')
    for edge in sorted(graph.edges, key=lambda e: (str(e.source), str(e.target), e.label)):
        attrs = f'label="{edge.label}"'
        if edge.double:
            attrs += ", double=true, style=bold"
        lines.append(f'  "{edge.source}" -> "{edge.target}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(graph: WeakOrderGraph) -> dict:
    """JSON-ready dump with deterministic ordering."""
    return {
        "type": graph.group,
        "rank": graph.rank,
        "top": str(graph.top),
        "vertices": sorted(str(v) for v in graph.vertices),
        "edges": sorted(
            (
                {
                    "src": str(e.source),
                    "dst": str(e.target),
                    "label": e.label,
                    "double": e.double,
                }
                for e in graph.edges
            ),
            key=lambda item: (item["src"], item["dst"], item["label"]),
        ),
    }


def graph_from_json(data: dict) -> WeakOrderGraph:
    """Rebuild a graph from the :func:`graph_to_json` format (codimensions
    are recomputed from the stored edges).
    """
    group, rank = data["type"], data["rank"]
    vertices = tuple(parse_clan(text) for text in data["vertices"])
    edges = tuple(
        Edge(parse_clan(e["src"]), parse_clan(e["dst"]), e["label"], e["double"])
        for e in data["edges"]
    )
    top = parse_clan(data["top"])
    incoming: dict[Clan, list[Clan]] = {v: [] for v in vertices}
    for edge in edges:
        incoming[edge.target].append(edge.source)
    codim = {top: 0}
    queue = deque([top])
    while queue:
        here = queue.popleft()
        for src in incoming[here]:
            if src not in codim:
                codim[src] = codim[here] + 1
                queue.append(src)
    return WeakOrderGraph(group, rank, vertices, edges, top, codim)
