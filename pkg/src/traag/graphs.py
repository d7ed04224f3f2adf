"""Mixed graphs and the constructions every other module consumes.

A mixed graph is a finite simplicial graph (no loops, no multi-edges,
non-empty vertex set) in which each edge is either undirected or carries a
direction, i.e. an origin and a terminus.  Vertices are named strings; the
declaration order of the vertex list is the canonical total order used for
every deterministic choice downstream: serialization, witness tie-breaking,
component listing, and word normal forms.

The textual format is line based::

    # comment
    vertices a b c
    edge a - b
    edge a > c

``-`` declares an undirected edge, ``>`` a directed edge whose origin is the
left vertex and whose terminus is the right one.  Files conventionally use
the extension ``.tg``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import (
    DuplicateVertexError,
    MissingKindError,
    ParseError,
    PreconditionError,
    SizeLimitError,
    UnknownVertexError,
)

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

# Edge kinds accepted by cone(); a cone tip never has outgoing edges.
UNDIRECTED = "undirected"
INTO_TIP = "into_tip"


@dataclass(frozen=True)
class Edge:
    """A single edge.

    For a directed edge ``u`` is the origin and ``v`` the terminus.  For an
    undirected edge the pair is unordered; the owning graph normalizes the
    stored order so that ``u`` precedes ``v`` canonically.
    """

    u: str
    v: str
    directed: bool = False

    @property
    def origin(self) -> str:
        if not self.directed:
            raise ValueError("undirected edge has no origin")
        return self.u

    @property
    def terminus(self) -> str:
        if not self.directed:
            raise ValueError("undirected edge has no terminus")
        return self.v

    def endpoints(self) -> tuple[str, str]:
        return (self.u, self.v)

    def other(self, w: str) -> str:
        """The endpoint that is not ``w``."""
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise ValueError("%r is not an endpoint of %r" % (w, self))


def und(u: str, v: str) -> Edge:
    """Undirected edge between ``u`` and ``v``."""
    return Edge(u, v, directed=False)


def arc(origin: str, terminus: str) -> Edge:
    """Directed edge with the given origin and terminus."""
    return Edge(origin, terminus, directed=True)


class MixedGraph:
    """Immutable mixed graph with named vertices in a fixed canonical order.

    Construction validates all invariants: the vertex list is non-empty with
    distinct well-formed names, edges join two distinct known vertices, and
    each unordered vertex pair carries at most one edge.  Undirected edges
    are stored with their endpoints in canonical order and the edge list is
    sorted canonically, so equal graphs compare and hash equal regardless of
    the edge order they were built from.
    """

    __slots__ = ("vertices", "edges", "_index", "_adj", "_pair")

    def __init__(self, vertices, edges=()):
        vertices = tuple(vertices)
        if not vertices:
            raise PreconditionError("vertex set must be non-empty")
        index = {}
        for name in vertices:
            if not isinstance(name, str) or not NAME_RE.match(name):
                raise PreconditionError("invalid vertex name %r" % (name,))
            if name in index:
                raise DuplicateVertexError("duplicate vertex %r" % name)
            index[name] = len(index)
        pair = {}
        for e in edges:
            if not isinstance(e, Edge):
                raise TypeError("expected Edge, got %r" % (e,))
            for w in (e.u, e.v):
                if w not in index:
                    raise UnknownVertexError("unknown vertex %r" % w)
            if e.u == e.v:
                raise PreconditionError("loop at vertex %r" % e.u)
            key = (min(index[e.u], index[e.v]), max(index[e.u], index[e.v]))
            if key in pair:
                raise PreconditionError(
                    "more than one edge between %r and %r" % (e.u, e.v)
                )
            if not e.directed and index[e.u] > index[e.v]:
                e = Edge(e.v, e.u)
            pair[key] = e
        self.vertices = vertices
        self.edges = tuple(pair[k] for k in sorted(pair))
        self._index = index
        adj = {v: set() for v in vertices}
        for e in self.edges:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
        self._adj = {v: frozenset(s) for v, s in adj.items()}
        self._pair = pair

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return "MixedGraph(%r, %r)" % (self.vertices, self.edges)

    def __contains__(self, name) -> bool:
        return name in self._index

    def index_of(self, name: str) -> int:
        """Canonical position of a vertex (its declaration index)."""
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVertexError("unknown vertex %r" % (name,)) from None

    def order(self, names) -> tuple[str, ...]:
        """The given vertex names sorted into canonical order."""
        return tuple(sorted(names, key=self.index_of))

    def neighbors(self, name: str) -> frozenset:
        """All vertices adjacent to ``name``, ignoring edge direction."""
        try:
            return self._adj[name]
        except KeyError:
            raise UnknownVertexError("unknown vertex %r" % (name,)) from None

    def edge_between(self, u: str, v: str):
        """The edge joining ``u`` and ``v``, or None (also for unknown names)."""
        iu = self._index.get(u)
        iv = self._index.get(v)
        if iu is None or iv is None or iu == iv:
            return None
        return self._pair.get((min(iu, iv), max(iu, iv)))

    def is_universal(self, name: str) -> bool:
        """True if ``name`` is adjacent to every other vertex."""
        return len(self.neighbors(name)) == len(self.vertices) - 1

    @property
    def directed_edge_count(self) -> int:
        return sum(1 for e in self.edges if e.directed)


def parse_graph(text: str) -> MixedGraph:
    """Parse the line-based graph format; raises ParseError with a line number."""
    vertices = None
    index = {}
    edges = []
    seen_pairs = set()
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "vertices":
            if vertices is not None:
                raise ParseError("repeated vertices line", ln)
            names = tokens[1:]
            if not names:
                raise ParseError("vertices line declares no vertices", ln)
            for name in names:
                if not NAME_RE.match(name):
                    raise ParseError("invalid vertex name %r" % name, ln)
                if name in index:
                    raise ParseError("duplicate vertex %r" % name, ln)
                index[name] = len(index)
            vertices = names
        elif tokens[0] == "edge":
            if vertices is None:
                raise ParseError("edge line before vertices line", ln)
            if len(tokens) != 4 or tokens[2] not in ("-", ">"):
                raise ParseError(
                    "expected 'edge u - v' or 'edge u > v', got %r" % line, ln
                )
            _, u, op, v = tokens
            for w in (u, v):
                if w not in index:
                    raise ParseError("unknown endpoint %r" % w, ln)
            if u == v:
                raise ParseError("loop at vertex %r" % u, ln)
            key = frozenset((u, v))
            if key in seen_pairs:
                raise ParseError("duplicate edge between %r and %r" % (u, v), ln)
            seen_pairs.add(key)
            edges.append(Edge(u, v, directed=(op == ">")))
        else:
            raise ParseError("unknown directive %r" % tokens[0], ln)
    if vertices is None:
        raise ParseError("missing vertices line")
    return MixedGraph(vertices, edges)


def serialize_graph(g: MixedGraph) -> str:
    """Canonical text form; parse_graph(serialize_graph(g)) == g."""
    lines = ["vertices " + " ".join(g.vertices)]
    for e in g.edges:
        lines.append("edge %s %s %s" % (e.u, ">" if e.directed else "-", e.v))
    return "\n".join(lines)


def underlying(g: MixedGraph) -> MixedGraph:
    """The same graph with every direction forgotten."""
    return MixedGraph(g.vertices, [Edge(e.u, e.v) for e in g.edges])


def induced(g: MixedGraph, keep) -> MixedGraph:
    """The induced subgraph on the vertex set ``keep``, kinds preserved."""
    keep = set(keep)
    for v in keep:
        if v not in g:
            raise UnknownVertexError("unknown vertex %r" % (v,))
    vertices = [v for v in g.vertices if v in keep]
    edges = [e for e in g.edges if e.u in keep and e.v in keep]
    return MixedGraph(vertices, edges)


def disjoint_union(g1: MixedGraph, g2: MixedGraph) -> MixedGraph:
    """Disjoint union, g1's vertices first.

    Colliding names from g2 are suffixed with "_2" (repeatedly if needed).
    """
    taken = set(g1.vertices)
    rename = {}
    for v in g2.vertices:
        name = v
        while name in taken:
            name += "_2"
        rename[v] = name
        taken.add(name)
    vertices = g1.vertices + tuple(rename[v] for v in g2.vertices)
    edges = list(g1.edges)
    edges.extend(Edge(rename[e.u], rename[e.v], e.directed) for e in g2.edges)
    return MixedGraph(vertices, edges)


def cone(g: MixedGraph, tip: str, kinds) -> MixedGraph:
    """Add a new vertex ``tip`` adjacent to every vertex of ``g``.

    ``kinds`` maps each vertex of g to UNDIRECTED (plain edge to the tip) or
    INTO_TIP (directed edge with that vertex as origin and the tip as
    terminus).  The base graph is otherwise unchanged and the tip is
    appended last in canonical order.
    """
    if not isinstance(tip, str) or not NAME_RE.match(tip):
        raise PreconditionError("invalid vertex name %r" % (tip,))
    if tip in g:
        raise DuplicateVertexError("tip %r is already a vertex" % tip)
    for v in kinds:
        if v not in g:
            raise UnknownVertexError("unknown vertex %r in kinds" % (v,))
    edges = list(g.edges)
    for v in g.vertices:
        kind = kinds.get(v)
        if kind is None:
            raise MissingKindError("no edge kind for vertex %r" % v)
        if kind == UNDIRECTED:
            edges.append(Edge(v, tip))
        elif kind == INTO_TIP:
            edges.append(arc(v, tip))
        else:
            raise ValueError("bad cone edge kind %r" % (kind,))
    return MixedGraph(g.vertices + (tip,), edges)


def link(g: MixedGraph, v: str) -> frozenset:
    """All vertices adjacent to ``v``, any edge kind."""
    return g.neighbors(v)


def components(g: MixedGraph) -> list:
    """Connected components of the underlying graph.

    Each component is a tuple in canonical order; the list is ordered by
    each component's canonically smallest member.
    """
    seen = set()
    out = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(g.order(comp))
    return out


def enumerate_mixed_graphs(n: int):
    """All labeled mixed graphs on vertices v1..vn, in a fixed order.

    Each unordered vertex pair independently gets one of: no edge, an
    undirected edge, or a directed edge in either orientation, so there are
    4^(n(n-1)/2) graphs.  Only 1 <= n <= 5 is allowed.
    """
    if not isinstance(n, int) or not 1 <= n <= 5:
        raise SizeLimitError("vertex count must be between 1 and 5, got %r" % (n,))
    names = tuple("v%d" % i for i in range(1, n + 1))
    pairs = list(itertools.combinations(range(n), 2))

    def generate():
        for choices in itertools.product(range(4), repeat=len(pairs)):
            edges = []
            for (i, j), c in zip(pairs, choices):
                if c == 0:
                    continue
                if c == 1:
                    edges.append(Edge(names[i], names[j]))
                elif c == 2:
                    edges.append(arc(names[i], names[j]))
                else:
                    edges.append(arc(names[j], names[i]))
            yield MixedGraph(names, edges)

    return generate()
