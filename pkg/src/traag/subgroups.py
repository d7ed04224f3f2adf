"""Index-2 subgroup machinery at a universal vertex.

For a universal vertex x, the subgroup generated by x^2 together with every
other vertex is normal of index 2 (the quotient kills all generators except
x and forces x^2 = 1).  Conjugation by x acts on each neighbor v according
to the edge joining them:

    undirected              x v x^-1 = v            "fixed"
    directed, terminus x    x v x^-1 = v^-1         "inverted"
    directed, origin x      x v x^-1 = v x^-2       "shifted"

The subgroup is again presented by a mixed graph: x is replaced by a fresh
generator standing for x^2; edges whose terminus was x become undirected
(the square commutes with those neighbors), edges with origin x keep their
direction, and everything away from x is untouched.  Words of even
x-exponent are rewritten into the new generators by scanning letters while
tracking the current coset of the transversal {1, x}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ApexShapeError,
    NotInSubgroupError,
    NotUniversalError,
    UnknownGeneratorError,
)
from .graphs import Edge, MixedGraph, arc
from .words import Syllable, Word, _reduce, invert, is_identity, normal_form, relator

FIXED = "fixed"
INVERTED = "inverted"
SHIFTED = "shifted"


@dataclass(frozen=True)
class SubgroupGraphResult:
    """The transformed presentation graph of the index-2 subgroup."""

    delta: MixedGraph
    apex: str
    apex_square: str
    generator_map: dict  # delta vertex -> word over the original generators
    conjugation_table: dict  # neighbor -> FIXED | INVERTED | SHIFTED


@dataclass(frozen=True)
class RelatorCheck:
    edge: Edge
    relator: Word  # over the subgroup presentation graph
    image: Word  # after substituting the generator map
    ok: bool


@dataclass(frozen=True)
class PresentationVerification:
    result: SubgroupGraphResult
    checks: tuple

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)


@dataclass(frozen=True)
class SemidirectAction:
    """How each neighbor conjugates the cyclic group the apex generates."""

    apex: str
    signs: dict  # neighbor -> +1 | -1
    direct_product: bool  # all signs +1


def _require_universal(g: MixedGraph, x: str):
    if not g.is_universal(x):
        raise NotUniversalError("vertex %r is not universal" % x)


def apex_subgroup_graph(g: MixedGraph, x: str) -> SubgroupGraphResult:
    """Presentation graph of <x^2, link(x)> for a universal vertex x.

    The new generator is named "<x>_sq" (suffixed with "_2" while taken).
    """
    _require_universal(g, x)
    y = x + "_sq"
    while y in g:
        y += "_2"
    vertices = tuple(y if v == x else v for v in g.vertices)
    edges = []
    table = {}
    for e in g.edges:
        if x not in (e.u, e.v):
            edges.append(e)
            continue
        v = e.other(x)
        if not e.directed:
            table[v] = FIXED
            edges.append(Edge(v, y))
        elif e.v == x:
            table[v] = INVERTED
            edges.append(Edge(v, y))
        else:
            table[v] = SHIFTED
            edges.append(arc(y, v))
    delta = MixedGraph(vertices, edges)
    generator_map = {
        v: Word(((x, 2),)) if v == y else Word(((v, 1),)) for v in vertices
    }
    return SubgroupGraphResult(delta, x, y, generator_map, table)


def in_index2_subgroup(g: MixedGraph, x: str, w: Word) -> bool:
    """True iff the total exponent of x in w is even."""
    _require_universal(g, x)
    for s in w.syllables:
        if s.gen not in g:
            raise UnknownGeneratorError("unknown generator %r" % s.gen)
    return sum(s.exp for s in w.syllables if s.gen == x) % 2 == 0


def rewrite_into_subgroup(
    g: MixedGraph,
    x: str,
    w: Word,
    strict: bool = False,
    normalize: bool = False,
):
    """Rewrite a word of even x-exponent over the subgroup generators.

    Scans w letter by letter while tracking the current coset (1 or x) of
    the transversal {1, x}; occurrences of x v x^-1 are emitted via the
    conjugation table and x x emits the square generator.  Returns None for
    words outside the subgroup (or raises NotInSubgroupError when strict).
    The output is freely reduced; pass normalize=True for its normal form
    over the subgroup presentation graph.

    Substituting the generator map back into the output always yields a word
    equal to w in the original group.
    """
    result = apex_subgroup_graph(g, x)
    if not in_index2_subgroup(g, x, w):
        if strict:
            raise NotInSubgroupError(
                "word has odd %r-exponent, not in the index-2 subgroup" % x
            )
        return None
    y = result.apex_square
    table = result.conjugation_table
    out = []
    in_x_coset = False
    for gen, exp in w.syllables:
        step = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            if gen == x:
                if not in_x_coset:
                    if step == -1:
                        out.append(Syllable(y, -1))
                    in_x_coset = True
                else:
                    if step == 1:
                        out.append(Syllable(y, 1))
                    in_x_coset = False
            elif not in_x_coset:
                out.append(Syllable(gen, step))
            else:
                kind = table[gen]
                if kind == FIXED:
                    out.append(Syllable(gen, step))
                elif kind == INVERTED:
                    out.append(Syllable(gen, -step))
                elif step == 1:  # SHIFTED: x v x^-1 = v y^-1
                    out.append(Syllable(gen, 1))
                    out.append(Syllable(y, -1))
                else:
                    out.append(Syllable(y, 1))
                    out.append(Syllable(gen, -1))
    word = Word(_reduce(out))
    if normalize:
        word = normal_form(result.delta, word)
    return word


def substitute(w: Word, mapping) -> Word:
    """Replace every generator by its image word, then freely reduce."""
    pairs = []
    for gen, exp in w.syllables:
        image = mapping.get(gen)
        if image is None:
            raise UnknownGeneratorError("no image for generator %r" % gen)
        block = image.syllables if exp > 0 else invert(image).syllables
        for _ in range(abs(exp)):
            pairs.extend(block)
    return Word(_reduce(pairs))


def verify_subgroup_presentation(g: MixedGraph, x: str) -> PresentationVerification:
    """Check every relator of the transformed graph inside the original group.

    Each relator of the subgroup presentation is substituted through the
    generator map and handed to the word engine; a sound transform makes all
    of them vanish.
    """
    result = apex_subgroup_graph(g, x)
    checks = []
    for e in result.delta.edges:
        rel = relator(result.delta, e)
        image = substitute(rel, result.generator_map)
        checks.append(RelatorCheck(e, rel, image, is_identity(g, image)))
    return PresentationVerification(result, tuple(checks))


def semidirect_action(g: MixedGraph, apex: str) -> SemidirectAction:
    """Signs of the conjugation action of the neighbors on <apex>.

    Requires the apex to be universal with every incident edge undirected or
    directed with the apex as origin; then each neighbor v satisfies
    v apex v^-1 = apex^sign(v).  When every sign is +1 the extension is a
    direct product.
    """
    _require_universal(g, apex)
    signs = {}
    for v in g.vertices:
        if v == apex:
            continue
        edge = g.edge_between(apex, v)
        if not edge.directed:
            signs[v] = 1
        elif edge.u == apex:
            signs[v] = -1
        else:
            raise ApexShapeError(
                "edge from %r into %r breaks the splitting hypothesis" % (v, apex)
            )
    return SemidirectAction(apex, signs, all(s == 1 for s in signs.values()))
