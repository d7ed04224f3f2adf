"""Group words over a mixed graph's vertices and the twisted shuffle engine.

A word is a sequence of syllables (generator, non-zero exponent).  The
defining graph induces relations between generators: an undirected edge
makes its endpoints commute, while a directed edge with origin p and
terminus q imposes pqp = q.  The latter is equivalent to saying that
conjugating p by q (or by q^-1) inverts p, which gives the syllable-level
exchange rule

    p^a q^b = q^b p^(a * (-1)^b)        q^b p^a = p^(a * (-1)^b) q^b

i.e. exchanging adjacent syllables across a directed edge flips the sign of
the origin exponent exactly when the terminus exponent is odd, and never
touches the terminus exponent.  Undirected edges exchange syllables
unchanged; generators with no edge between them cannot be exchanged at all.

normal_form() computes the shortlex-minimal representative in two phases.
The cancellation phase looks for two syllables of the same generator that
can be brought together (every syllable between them is joined to that
generator by an edge) and whose exponents, after accounting for the sign
flips incurred while crossing, partly cancel; applying such a merge
strictly shrinks letter length, so this phase terminates on a word of
minimal length.  The ordering phase then repeatedly extracts, among the
syllables that can be moved to the front, the one with the canonically
least generator, which yields the lexicographically least ordering the
exchange moves can reach.  Note that sorting adjacent out-of-order pairs
alone is not enough: a trailing syllable sometimes has to travel across
smaller generators to merge with an earlier one, so the cancellation phase
must be allowed to move syllables against the sort order.  That all words
equal in the group reach the same output is validated empirically against
bfs_equivalence_class(), the brute-force oracle that explores
letter-by-letter rewrites.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    ParseError,
    PreconditionError,
    SizeLimitError,
    UnknownEdgeError,
    UnknownGeneratorError,
)
from .graphs import Edge, MixedGraph

_TOKEN_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?\Z")

ORACLE_CAP_ENV = "TRAAG_ORACLE_CAP"
DEFAULT_ORACLE_CAP = 200_000


class Syllable(NamedTuple):
    gen: str
    exp: int


@dataclass(frozen=True)
class Word:
    """An immutable word; the empty tuple of syllables is the identity."""

    syllables: tuple = ()

    def __post_init__(self):
        sylls = tuple(Syllable(g, e) for g, e in self.syllables)
        for s in sylls:
            if s.exp == 0:
                raise ValueError("zero exponent on generator %r" % s.gen)
        object.__setattr__(self, "syllables", sylls)

    def __iter__(self):
        return iter(self.syllables)

    def __len__(self):
        return len(self.syllables)

    @property
    def letter_length(self) -> int:
        return sum(abs(s.exp) for s in self.syllables)

    def generators(self) -> frozenset:
        return frozenset(s.gen for s in self.syllables)

    def __repr__(self):
        return "Word(%r)" % serialize_word(self)


IDENTITY = Word()


def parse_word(text: str, graph: MixedGraph | None = None) -> Word:
    """Parse whitespace-separated tokens ``name`` or ``name^k`` (k nonzero).

    The empty string and the single token "1" denote the identity.  When a
    graph is supplied, generators must be among its vertices.
    """
    tokens = text.split()
    if tokens in ([], ["1"]):
        return IDENTITY
    sylls = []
    for tok in tokens:
        m = _TOKEN_RE.match(tok)
        if not m:
            raise ParseError("bad word token %r" % tok)
        gen = m.group(1)
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0:
            raise ParseError("zero exponent in token %r" % tok)
        if graph is not None and gen not in graph:
            raise ParseError("unknown generator %r" % gen)
        sylls.append(Syllable(gen, exp))
    return Word(tuple(sylls))


def serialize_word(w: Word) -> str:
    if not w.syllables:
        return "1"
    parts = []
    for g, e in w.syllables:
        parts.append(g if e == 1 else "%s^%d" % (g, e))
    return " ".join(parts)


def _reduce(sylls) -> tuple:
    """Merge adjacent same-generator syllables and drop zeros, cascading."""
    out = []
    for g, e in sylls:
        if e == 0:
            continue
        if out and out[-1].gen == g:
            e2 = out[-1].exp + e
            out.pop()
            if e2:
                out.append(Syllable(g, e2))
        else:
            out.append(Syllable(g, e))
    return tuple(out)


def free_reduce(w: Word) -> Word:
    return Word(_reduce(w.syllables))


def invert(w: Word) -> Word:
    return Word(_reduce(Syllable(g, -e) for g, e in reversed(w.syllables)))


def concat(w1: Word, w2: Word) -> Word:
    return Word(_reduce(w1.syllables + w2.syllables))


def conjugate(w: Word, u: Word) -> Word:
    """u w u^-1, freely reduced (no graph relations applied)."""
    return concat(concat(u, w), invert(u))


def square_map(w: Word) -> Word:
    """Double every exponent (the embedding of the untwisted group)."""
    return Word(tuple(Syllable(g, 2 * e) for g, e in w.syllables))


def _same_edge(stored: Edge, e: Edge) -> bool:
    if stored.directed != e.directed:
        return False
    if stored.directed:
        return (stored.u, stored.v) == (e.u, e.v)
    return {stored.u, stored.v} == {e.u, e.v}


def relator(g: MixedGraph, e: Edge) -> Word:
    """The defining relator of an edge.

    Undirected {a, b} with a canonically first: a b a^-1 b^-1.
    Directed with origin a and terminus b: a b a b^-1.
    """
    stored = g.edge_between(e.u, e.v)
    if stored is None or not _same_edge(stored, e):
        raise UnknownEdgeError("edge %r is not in the graph" % (e,))
    a, b = stored.u, stored.v
    if stored.directed:
        return Word((Syllable(a, 1), Syllable(b, 1), Syllable(a, 1), Syllable(b, -1)))
    return Word((Syllable(a, 1), Syllable(b, 1), Syllable(a, -1), Syllable(b, -1)))


def _exchange(edge: Edge, a: Syllable, b: Syllable) -> tuple:
    """Exchange adjacent syllables a, b across the edge joining their
    generators, applying the origin sign flip for directed edges."""
    if not edge.directed:
        return b, a
    if edge.u == a.gen:
        # left syllable is the origin, right the terminus
        exp = -a.exp if b.exp % 2 else a.exp
        return b, Syllable(a.gen, exp)
    # right syllable is the origin, left the terminus
    exp = -b.exp if a.exp % 2 else b.exp
    return Syllable(b.gen, exp), a


def swap_adjacent(g: MixedGraph, w: Word, i: int):
    """Exchange syllables i and i+1 if an edge joins their generators.

    Returns the freely reduced result, or None when the generators carry no
    relation.  The two syllables must use distinct generators.
    """
    sylls = w.syllables
    if not 0 <= i < len(sylls) - 1:
        raise IndexError("no adjacent pair at position %d" % i)
    a, b = sylls[i], sylls[i + 1]
    if a.gen == b.gen:
        raise PreconditionError("adjacent syllables share generator %r" % a.gen)
    edge = g.edge_between(a.gen, b.gen)
    if edge is None:
        return None
    x, y = _exchange(edge, a, b)
    return Word(_reduce(sylls[:i] + (x, y) + sylls[i + 2:]))


def _check_generators(g: MixedGraph, w: Word):
    for s in w.syllables:
        if s.gen not in g:
            raise UnknownGeneratorError("unknown generator %r" % s.gen)


def _cancellation_pass(g: MixedGraph, pairs):
    """Apply one shuffle cancellation if possible, else return None.

    Looks for a syllable and the next occurrence of its generator such that
    all syllables in between carry an edge to that generator; transports the
    later syllable leftwards (flipping its sign once per crossed odd
    terminus syllable when it is the origin, and flipping crossed origin
    syllables when it is an odd terminus) and merges.  Only merges that
    shorten letter length are taken.
    """
    n = len(pairs)
    for i in range(n):
        gen = pairs[i].gen
        j = None
        for k in range(i + 1, n):
            if pairs[k].gen == gen:
                j = k
                break
        if j is None:
            continue
        flip_moving = False
        blocked = False
        for k in range(i + 1, j):
            edge = g.edge_between(pairs[k].gen, gen)
            if edge is None:
                blocked = True
                break
            if edge.directed and edge.u == gen and pairs[k].exp % 2:
                flip_moving = not flip_moving
        if blocked:
            continue
        moved = -pairs[j].exp if flip_moving else pairs[j].exp
        if (pairs[i].exp > 0) == (moved > 0):
            continue
        merged = pairs[i].exp + moved
        moving_odd = pairs[j].exp % 2
        out = list(pairs[:i])
        if merged:
            out.append(Syllable(gen, merged))
        for k in range(i + 1, j):
            t = pairs[k]
            edge = g.edge_between(t.gen, gen)
            if edge.directed and edge.v == gen and moving_odd:
                t = Syllable(t.gen, -t.exp)
            out.append(t)
        out.extend(pairs[j + 1:])
        return list(_reduce(out))
    return None


def _least_front_order(g: MixedGraph, pairs):
    """Greedy lexicographic minimization over the exchange moves.

    A syllable is available when every syllable before it uses a different
    generator joined to it by an edge; repeatedly extract the available
    syllable with the canonically least generator, applying the sign
    bookkeeping for each crossing.
    """
    index = g._index
    remaining = list(pairs)
    out = []
    while remaining:
        best = 0
        best_index = index[remaining[0].gen]
        for pos in range(1, len(remaining)):
            s = remaining[pos]
            if index[s.gen] >= best_index:
                continue
            movable = True
            for k in range(pos):
                t = remaining[k]
                if t.gen == s.gen or g.edge_between(t.gen, s.gen) is None:
                    movable = False
                    break
            if movable:
                best = pos
                best_index = index[s.gen]
        s = remaining[best]
        exp = s.exp
        for k in range(best):
            t = remaining[k]
            edge = g.edge_between(t.gen, s.gen)
            if edge.directed:
                if edge.u == s.gen:
                    if t.exp % 2:
                        exp = -exp
                elif s.exp % 2:
                    remaining[k] = Syllable(t.gen, -t.exp)
        del remaining[best]
        out.append(Syllable(s.gen, exp))
    return _reduce(out)


def normal_form(g: MixedGraph, w: Word) -> Word:
    """The shortlex-minimal representative of w in the group defined by g.

    Exhausts shuffle cancellations (minimal letter length), then orders the
    surviving syllables lexicographically by greedy front extraction.  The
    outer loop re-runs both phases until neither applies, which only
    recurs if the ordering phase exposed a new cancellation; every such
    round strictly shrinks the word, so the loop terminates.
    """
    _check_generators(g, w)
    pairs = list(_reduce(w.syllables))
    while True:
        nxt = _cancellation_pass(g, pairs)
        while nxt is not None:
            pairs = nxt
            nxt = _cancellation_pass(g, pairs)
        ordered = _least_front_order(g, pairs)
        if _cancellation_pass(g, list(ordered)) is None:
            return Word(ordered)
        pairs = list(ordered)


def equals(g: MixedGraph, w1: Word, w2: Word) -> bool:
    return normal_form(g, w1) == normal_form(g, w2)


def is_identity(g: MixedGraph, w: Word) -> bool:
    return not normal_form(g, w).syllables


def _letters(sylls) -> list:
    out = []
    for g, e in sylls:
        step = 1 if e > 0 else -1
        out.extend([Syllable(g, step)] * abs(e))
    return out


def _letter_moves(g: MixedGraph, sylls):
    """All words one letter-level exchange away from ``sylls``, reduced.

    Letter-level moves subsume syllable exchanges (an exchange of p^a with
    q^b is |a|*|b| letter crossings) and let a syllable split around
    material passing through it, so the explored class is finer than what
    syllable-level moves alone reach.
    """
    letters = _letters(sylls)
    for j in range(len(letters) - 1):
        a, b = letters[j], letters[j + 1]
        if a.gen == b.gen:
            continue
        edge = g.edge_between(a.gen, b.gen)
        if edge is None:
            continue
        x, y = _exchange(edge, a, b)
        yield _reduce(letters[:j] + [x, y] + letters[j + 2:])


def bfs_equivalence_class(g: MixedGraph, w: Word, radius: int, cap: int | None = None):
    """Freely reduced words reachable from w by at most ``radius`` rewrites.

    A rewrite exchanges two adjacent letters across an edge of the graph
    (with the directed sign flip), followed by free reduction.  Every member
    of the returned set is equal to w in the group; the set is used as the
    independent oracle grounding normal_form.  Raises SizeLimitError when
    the visited set would exceed ``cap`` (default from TRAAG_ORACLE_CAP).
    """
    _check_generators(g, w)
    if cap is None:
        cap = int(os.environ.get(ORACLE_CAP_ENV, str(DEFAULT_ORACLE_CAP)))
    start = _reduce(w.syllables)
    seen = {start}
    frontier = [start]
    for _ in range(radius):
        nxt = []
        for state in frontier:
            for succ in _letter_moves(g, state):
                if succ not in seen:
                    seen.add(succ)
                    if len(seen) > cap:
                        raise SizeLimitError(
                            "equivalence class exploration exceeded cap %d" % cap
                        )
                    nxt.append(succ)
        if not nxt:
            break
        frontier = nxt
    return {Word(s) for s in seen}
