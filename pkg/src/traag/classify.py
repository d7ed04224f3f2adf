"""Graph-side decision procedures.

All classifiers except is_in_class_r look only at the underlying simplicial
graph (adjacency, never direction):

* find_induced_p4 / find_induced_c4: brute-force search for an induced path
  or cycle on four vertices, returning the lexicographically least witness
  tuple under the canonical vertex order.
* is_transitive_forest: true iff neither forbidden shape occurs.  Computed
  by two independent routes whose agreement is asserted: the forbidden
  subgraph search, and recursive peeling of universal vertices (every
  connected induced subgraph of a transitive forest has a universal vertex).
* is_chordal: lex-BFS producing a candidate perfect elimination ordering
  which is then verified; on failure the witness is a chordless cycle found
  by exhaustive search.

is_in_class_r recognizes the cone class: graphs built from single vertices
by disjoint unions and cones whose tip edges are undirected or directed
into the tip.  It is the only direction-sensitive classifier and returns a
replayable derivation tree as its witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

from .errors import InternalDisagreementError
from .graphs import INTO_TIP, UNDIRECTED, MixedGraph, cone, disjoint_union


@dataclass(frozen=True)
class Leaf:
    vertex: str


@dataclass(frozen=True)
class Union:
    parts: tuple


@dataclass(frozen=True)
class Cone:
    base: object
    tip: str
    kinds: tuple  # pairs (vertex, UNDIRECTED | INTO_TIP) in canonical order


def replay_decomposition(d) -> MixedGraph:
    """Rebuild the graph a decomposition tree describes."""
    if isinstance(d, Leaf):
        return MixedGraph((d.vertex,))
    if isinstance(d, Union):
        return reduce(disjoint_union, (replay_decomposition(p) for p in d.parts))
    if isinstance(d, Cone):
        return cone(replay_decomposition(d.base), d.tip, dict(d.kinds))
    raise TypeError("not a decomposition node: %r" % (d,))


def decomposition_to_obj(d):
    """JSON-ready nested {leaf|union|cone} representation."""
    if isinstance(d, Leaf):
        return {"leaf": d.vertex}
    if isinstance(d, Union):
        return {"union": [decomposition_to_obj(p) for p in d.parts]}
    if isinstance(d, Cone):
        return {
            "cone": {
                "tip": d.tip,
                "kinds": dict(d.kinds),
                "base": decomposition_to_obj(d.base),
            }
        }
    raise TypeError("not a decomposition node: %r" % (d,))


def find_induced_p4(g: MixedGraph):
    """Least ordered tuple (a,b,c,d) inducing the path a-b-c-d, or None."""
    if len(g.vertices) < 4:
        return None
    nb = g.neighbors
    for a, b, c, d in itertools.permutations(g.vertices, 4):
        if (
            b in nb(a)
            and c in nb(b)
            and d in nb(c)
            and c not in nb(a)
            and d not in nb(a)
            and d not in nb(b)
        ):
            return (a, b, c, d)
    return None


def find_induced_c4(g: MixedGraph):
    """Least ordered tuple (a,b,c,d) inducing the cycle a-b-c-d-a, or None."""
    if len(g.vertices) < 4:
        return None
    nb = g.neighbors
    for a, b, c, d in itertools.permutations(g.vertices, 4):
        if (
            b in nb(a)
            and c in nb(b)
            and d in nb(c)
            and a in nb(d)
            and c not in nb(a)
            and d not in nb(b)
        ):
            return (a, b, c, d)
    return None


def _components_within(g: MixedGraph, vertex_set):
    """Connected components of the induced subgraph on ``vertex_set``,
    ordered by canonically smallest member."""
    seen = set()
    out = []
    for start in sorted(vertex_set, key=g.index_of):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in vertex_set and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out


def _peeling_verdict(g: MixedGraph) -> bool:
    """Transitive-forest test by peeling universal vertices per component."""

    def check(vertex_set) -> bool:
        for comp in _components_within(g, vertex_set):
            if len(comp) == 1:
                continue
            universal = None
            for v in sorted(comp, key=g.index_of):
                if comp - {v} <= g.neighbors(v):
                    universal = v
                    break
            if universal is None:
                return False
            if not check(comp - {universal}):
                return False
        return True

    return check(frozenset(g.vertices))


def is_transitive_forest(g: MixedGraph):
    """(verdict, witness) where the witness tags the forbidden shape found.

    Runs both the forbidden-subgraph search and the universal-vertex peeling
    recursion and raises InternalDisagreementError if they ever differ.
    """
    p4 = find_induced_p4(g)
    c4 = find_induced_c4(g)
    by_search = p4 is None and c4 is None
    by_peeling = _peeling_verdict(g)
    if by_search != by_peeling:
        raise InternalDisagreementError(
            "forbidden-subgraph search says %r, universal peeling says %r"
            % (by_search, by_peeling)
        )
    if p4 is not None:
        return False, ("p4", p4)
    if c4 is not None:
        return False, ("c4", c4)
    return True, None


def _lex_bfs_order(g: MixedGraph) -> list:
    # O(n^2) label variant; ties broken by canonical order for determinism.
    labels = {v: [] for v in g.vertices}
    unvisited = set(g.vertices)
    order = []
    n = len(g.vertices)
    while unvisited:
        best = max(unvisited, key=lambda v: (labels[v], -g.index_of(v)))
        unvisited.remove(best)
        order.append(best)
        weight = n - len(order)
        for u in g.neighbors(best):
            if u in unvisited:
                labels[u].append(weight)
    return order


def _verify_peo(g: MixedGraph, peo) -> bool:
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if len(later) <= 1:
            continue
        first = min(later, key=pos.__getitem__)
        nb = g.neighbors(first)
        for u in later:
            if u != first and u not in nb:
                return False
    return True


def find_chordless_cycle(g: MixedGraph):
    """Smallest induced cycle of length >= 4 as an ordered vertex tuple.

    Exhaustive over vertex subsets (smallest size first, then lexicographic),
    so it is an oracle independent of the elimination-ordering route.
    """
    n = len(g.vertices)
    if n < 4:
        return None
    names = g.vertices
    masks = [0] * n
    for e in g.edges:
        i, j = g.index_of(e.u), g.index_of(e.v)
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    for size in range(4, n + 1):
        for comb in itertools.combinations(range(n), size):
            mask = 0
            for i in comb:
                mask |= 1 << i
            if any((masks[i] & mask).bit_count() != 2 for i in comb):
                continue
            # all degrees are 2; connected means a single cycle
            seen = 1 << comb[0]
            stack = [comb[0]]
            while stack:
                i = stack.pop()
                rest = masks[i] & mask & ~seen
                while rest:
                    j = (rest & -rest).bit_length() - 1
                    seen |= 1 << j
                    stack.append(j)
                    rest &= rest - 1
            if seen != mask:
                continue
            start = comb[0]
            nbrs = [j for j in comb if masks[start] >> j & 1]
            cycle = [start]
            prev, cur = start, min(nbrs)
            while cur != start:
                cycle.append(cur)
                step = [j for j in comb if masks[cur] >> j & 1 and j != prev]
                prev, cur = cur, step[0]
            return tuple(names[i] for i in cycle)
    return None


def is_chordal(g: MixedGraph):
    """(verdict, witness): a verified perfect elimination ordering when
    chordal, otherwise a chordless cycle of length >= 4.

    Chordality is a property of the underlying graph; directions are
    ignored throughout.
    """
    candidate = tuple(reversed(_lex_bfs_order(g)))
    if _verify_peo(g, candidate):
        return True, ("peo", candidate)
    cycle = find_chordless_cycle(g)
    if cycle is None:
        raise InternalDisagreementError(
            "elimination ordering failed but no chordless cycle exists"
        )
    return False, ("chordless_cycle", cycle)


def is_in_class_r(g: MixedGraph):
    """Derivation tree witnessing cone-class membership, or None.

    A connected graph is peeled at a tip: a universal vertex all of whose
    incident edges are undirected or directed into it.  Candidate tips are
    tried from the canonically last vertex backwards with full backtracking,
    so a graph actually built by cones (which append their tip last) replays
    to the identical vertex order.  Disconnected graphs must decompose
    component by component.  Results are memoized per vertex subset.
    """
    memo = {}

    def tip_kinds(vertex_set, w):
        kinds = []
        for v in sorted(vertex_set - {w}, key=g.index_of):
            edge = g.edge_between(v, w)
            if not edge.directed:
                kinds.append((v, UNDIRECTED))
            elif edge.v == w:
                kinds.append((v, INTO_TIP))
            else:
                return None
        return tuple(kinds)

    def solve(vertex_set):
        if vertex_set in memo:
            return memo[vertex_set]
        result = None
        if len(vertex_set) == 1:
            result = Leaf(next(iter(vertex_set)))
        else:
            comps = _components_within(g, vertex_set)
            if len(comps) > 1:
                parts = []
                for comp in comps:
                    sub = solve(comp)
                    if sub is None:
                        parts = None
                        break
                    parts.append(sub)
                if parts is not None:
                    result = Union(tuple(parts))
            else:
                for w in sorted(vertex_set, key=g.index_of, reverse=True):
                    if not vertex_set - {w} <= g.neighbors(w):
                        continue
                    kinds = tip_kinds(vertex_set, w)
                    if kinds is None:
                        continue
                    sub = solve(vertex_set - {w})
                    if sub is not None:
                        result = Cone(sub, w, kinds)
                        break
        memo[vertex_set] = result
        return result

    return solve(frozenset(g.vertices))
