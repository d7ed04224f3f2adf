"""Shared corpus builders and witness verifiers for the test suite."""

from __future__ import annotations

import itertools

from traag import (
    Edge,
    MixedGraph,
    Syllable,
    Word,
    arc,
    free_reduce,
    parse_graph,
    und,
)

# -- named graphs ------------------------------------------------------------


def graph_p4():
    return parse_graph("vertices a b c d\nedge a - b\nedge b - c\nedge c - d")


def graph_c4():
    return parse_graph(
        "vertices a b c d\nedge a - b\nedge b - c\nedge c - d\nedge d - a"
    )


def graph_c5():
    return parse_graph(
        "vertices a b c d e\n"
        "edge a - b\nedge b - c\nedge c - d\nedge d - e\nedge e - a"
    )


def graph_klein():
    return parse_graph("vertices a b\nedge a > b")


def graph_z2():
    return parse_graph("vertices a b\nedge a - b")


def path_graph(names):
    edges = [und(a, b) for a, b in zip(names, names[1:])]
    return MixedGraph(names, edges)


def complete_graph(names):
    return MixedGraph(names, [und(a, b) for a, b in itertools.combinations(names, 2)])


def star(apex, leaf_kinds):
    """Star with the given apex; leaf_kinds maps leaf name to one of
    "und" (undirected), "in" (leaf -> apex), "out" (apex -> leaf)."""
    edges = []
    for leaf, kind in leaf_kinds.items():
        if kind == "und":
            edges.append(und(apex, leaf))
        elif kind == "in":
            edges.append(arc(leaf, apex))
        elif kind == "out":
            edges.append(arc(apex, leaf))
        else:
            raise ValueError(kind)
    return MixedGraph((apex,) + tuple(leaf_kinds), edges)


def all_stars(max_leaves):
    """Every star on 1..max_leaves leaves with every apex edge-kind choice."""
    for k in range(1, max_leaves + 1):
        leaves = tuple("l%d" % i for i in range(1, k + 1))
        for kinds in itertools.product(("und", "in", "out"), repeat=k):
            yield star("x", dict(zip(leaves, kinds)))


def decorate_star(rng, base):
    """Add random mixed edges among the leaves of a star."""
    leaves = base.vertices[1:]
    edges = list(base.edges)
    for a, b in itertools.combinations(leaves, 2):
        c = rng.randrange(4)
        if c == 1:
            edges.append(und(a, b))
        elif c == 2:
            edges.append(arc(a, b))
        elif c == 3:
            edges.append(arc(b, a))
    return MixedGraph(base.vertices, edges)


# -- random corpora ----------------------------------------------------------


def random_mixed_graph(rng, n):
    names = tuple("v%d" % i for i in range(1, n + 1))
    edges = []
    for i, j in itertools.combinations(range(n), 2):
        c = rng.randrange(4)
        if c == 1:
            edges.append(und(names[i], names[j]))
        elif c == 2:
            edges.append(arc(names[i], names[j]))
        elif c == 3:
            edges.append(arc(names[j], names[i]))
    return MixedGraph(names, edges)


def redirect_randomly(rng, g):
    """Same adjacency, random fresh edge kinds."""
    edges = []
    for e in g.edges:
        c = rng.randrange(3)
        if c == 0:
            edges.append(und(e.u, e.v))
        elif c == 1:
            edges.append(arc(e.u, e.v))
        else:
            edges.append(arc(e.v, e.u))
    return MixedGraph(g.vertices, edges)


def random_word(rng, g, max_letters):
    letters = []
    for _ in range(rng.randint(0, max_letters)):
        letters.append(Syllable(rng.choice(g.vertices), rng.choice((1, -1))))
    return free_reduce(Word(tuple(letters)))


def random_even_word(rng, g, x, max_letters, tries=200):
    """Random word whose total x-exponent is even."""
    for _ in range(tries):
        w = random_word(rng, g, max_letters)
        if sum(s.exp for s in w.syllables if s.gen == x) % 2 == 0:
            return w
    raise AssertionError("failed to sample an even-exponent word")


class _Namer:
    def __init__(self):
        self.counter = 0

    def next(self):
        self.counter += 1
        return "v%d" % self.counter


def random_class_r_graph(rng, budget, namer=None):
    """Graph built by a random derivation of unions and valid cones.

    Vertex names are allocated in construction order, so the declaration
    order is the construction trace.
    """
    namer = namer or _Namer()
    if budget == 1:
        return MixedGraph((namer.next(),))
    if budget >= 2 and rng.random() < 0.4:
        left = rng.randint(1, budget - 1)
        g1 = random_class_r_graph(rng, left, namer)
        g2 = random_class_r_graph(rng, budget - left, namer)
        return MixedGraph(
            g1.vertices + g2.vertices, list(g1.edges) + list(g2.edges)
        )
    base = random_class_r_graph(rng, budget - 1, namer)
    tip = namer.next()
    kinds = {v: rng.choice(("undirected", "into_tip")) for v in base.vertices}
    edges = list(base.edges)
    for v in base.vertices:
        edges.append(und(v, tip) if kinds[v] == "undirected" else arc(v, tip))
    return MixedGraph(base.vertices + (tip,), edges)


# -- witness verifiers -------------------------------------------------------


def edge_key(e: Edge):
    """Graph-independent canonical identity of an edge."""
    if e.directed:
        return (e.u, e.v, True)
    return (min(e.u, e.v), max(e.u, e.v), False)


def same_labeled(g1: MixedGraph, g2: MixedGraph) -> bool:
    """Equality of labeled graphs regardless of declaration order."""
    return set(g1.vertices) == set(g2.vertices) and {
        edge_key(e) for e in g1.edges
    } == {edge_key(e) for e in g2.edges}


def check_p4_witness(g, t):
    a, b, c, d = t
    nb = g.neighbors
    assert b in nb(a) and c in nb(b) and d in nb(c)
    assert c not in nb(a) and d not in nb(a) and d not in nb(b)


def check_c4_witness(g, t):
    a, b, c, d = t
    nb = g.neighbors
    assert b in nb(a) and c in nb(b) and d in nb(c) and a in nb(d)
    assert c not in nb(a) and d not in nb(b)


def check_peo(g, order):
    assert sorted(order) == sorted(g.vertices)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        for u1, u2 in itertools.combinations(later, 2):
            assert u2 in g.neighbors(u1), "later neighbors of %r not a clique" % v


def check_chordless_cycle(g, cycle):
    assert len(cycle) >= 4
    assert len(set(cycle)) == len(cycle)
    nb = g.neighbors
    for i, v in enumerate(cycle):
        assert cycle[(i + 1) % len(cycle)] in nb(v)
    for i, v in enumerate(cycle):
        for j in range(i + 2, len(cycle)):
            if i == 0 and j == len(cycle) - 1:
                continue
            assert cycle[j] not in nb(v), "chord in returned cycle"
