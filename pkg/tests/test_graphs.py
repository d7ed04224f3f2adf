import itertools

import pytest
from hypothesis import given, strategies as st

from traag import (
    DuplicateVertexError,
    MissingKindError,
    MixedGraph,
    ParseError,
    PreconditionError,
    SizeLimitError,
    UnknownVertexError,
    arc,
    components,
    cone,
    disjoint_union,
    enumerate_mixed_graphs,
    induced,
    link,
    parse_graph,
    serialize_graph,
    und,
    underlying,
)
from helpers import graph_c4, graph_p4, random_mixed_graph


@st.composite
def mixed_graphs(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    names = tuple("v%d" % i for i in range(1, n + 1))
    edges = []
    for i, j in itertools.combinations(range(n), 2):
        c = draw(st.integers(min_value=0, max_value=3))
        if c == 1:
            edges.append(und(names[i], names[j]))
        elif c == 2:
            edges.append(arc(names[i], names[j]))
        elif c == 3:
            edges.append(arc(names[j], names[i]))
    return MixedGraph(names, edges)


def test_parse_undirected_edge():
    g = parse_graph("vertices a b\nedge a - b")
    assert g.vertices == ("a", "b")
    assert g.edges == (und("a", "b"),)


def test_parse_directed_edge():
    g = parse_graph("vertices a b\nedge a > b")
    assert g.edges == (arc("a", "b"),)
    assert g.edges[0].origin == "a" and g.edges[0].terminus == "b"


def test_parse_rejects_loop():
    with pytest.raises(ParseError) as exc:
        parse_graph("vertices a\nedge a - a")
    assert exc.value.line == 2


def test_parse_rejects_duplicates_and_unknowns():
    with pytest.raises(ParseError):
        parse_graph("vertices a a")
    with pytest.raises(ParseError):
        parse_graph("vertices a b\nedge a - c")
    with pytest.raises(ParseError):
        parse_graph("vertices a b\nedge a - b\nedge b > a")
    with pytest.raises(ParseError):
        parse_graph("edge a - b")
    with pytest.raises(ParseError):
        parse_graph("vertices a b\nfrobnicate a b")


def test_parse_comments_and_blank_lines():
    g = parse_graph("# header\n\nvertices a b\n# middle\nedge a - b\n")
    assert g == MixedGraph(("a", "b"), [und("a", "b")])


def test_serialize_examples():
    assert serialize_graph(MixedGraph("ab", [und("a", "b")])) == (
        "vertices a b\nedge a - b"
    )
    assert serialize_graph(MixedGraph("ab", [arc("a", "b")])) == (
        "vertices a b\nedge a > b"
    )
    assert serialize_graph(MixedGraph("abc")) == "vertices a b c"


def test_constructor_normalizes_undirected_endpoint_order():
    g = MixedGraph(("a", "b"), [und("b", "a")])
    assert g.edges == (und("a", "b"),)
    # directed edges keep origin/terminus even against canonical order
    g2 = MixedGraph(("a", "b"), [arc("b", "a")])
    assert g2.edges == (arc("b", "a"),)


def test_constructor_rejects_bad_input():
    with pytest.raises(PreconditionError):
        MixedGraph(())
    with pytest.raises(PreconditionError):
        MixedGraph(("bad name",))
    with pytest.raises(DuplicateVertexError):
        MixedGraph(("a", "a"))
    with pytest.raises(UnknownVertexError):
        MixedGraph(("a",), [und("a", "b")])
    with pytest.raises(PreconditionError):
        MixedGraph(("a", "b"), [und("a", "b"), arc("a", "b")])


@given(mixed_graphs())
def test_round_trip_and_canonical_idempotence(g):
    text = serialize_graph(g)
    assert parse_graph(text) == g
    assert serialize_graph(parse_graph(text)) == text


def test_underlying():
    g = MixedGraph(("a", "b"), [arc("a", "b")])
    assert underlying(g) == MixedGraph(("a", "b"), [und("a", "b")])
    plain = graph_p4()
    assert underlying(plain) == plain
    square = parse_graph(
        "vertices a b c d\nedge a > b\nedge b - c\nedge c > d\nedge d - a"
    )
    assert underlying(square) == graph_c4()


@given(mixed_graphs())
def test_underlying_idempotent(g):
    assert underlying(underlying(g)) == underlying(g)


def test_induced_examples():
    assert induced(graph_p4(), {"a", "b"}) == MixedGraph(("a", "b"), [und("a", "b")])
    g = graph_c4()
    assert induced(g, g.vertices) == g
    assert induced(g, {"a", "c"}) == MixedGraph(("a", "c"))
    with pytest.raises(UnknownVertexError):
        induced(g, {"a", "zz"})


@given(mixed_graphs(), st.data())
def test_induced_nesting(g, data):
    s = set(data.draw(st.lists(st.sampled_from(g.vertices), unique=True, min_size=1)))
    t = set(data.draw(st.lists(st.sampled_from(g.vertices), unique=True)))
    both = s & t
    if both:
        assert induced(g, both) == induced(induced(g, s), both)


def test_disjoint_union():
    u = disjoint_union(MixedGraph(("a",)), MixedGraph(("b",)))
    assert u == MixedGraph(("a", "b"))
    u2 = disjoint_union(
        MixedGraph(("a", "b"), [und("a", "b")]),
        MixedGraph(("c", "d"), [arc("c", "d")]),
    )
    assert u2 == MixedGraph(("a", "b", "c", "d"), [und("a", "b"), arc("c", "d")])


def test_disjoint_union_renames_collisions():
    u = disjoint_union(
        MixedGraph(("a", "b")), MixedGraph(("a", "c"), [arc("a", "c")])
    )
    assert u.vertices == ("a", "b", "a_2", "c")
    assert u.edges == (arc("a_2", "c"),)
    # repeated suffixing when the suffixed name is also taken
    u2 = disjoint_union(MixedGraph(("a", "a_2")), MixedGraph(("a",)))
    assert u2.vertices == ("a", "a_2", "a_2_2")


def test_cone_examples():
    base = MixedGraph(("a", "b"))
    g = cone(base, "w", {"a": "undirected", "b": "undirected"})
    assert g == MixedGraph(("a", "b", "w"), [und("a", "w"), und("b", "w")])
    g2 = cone(MixedGraph(("a",)), "w", {"a": "into_tip"})
    assert g2 == MixedGraph(("a", "w"), [arc("a", "w")])
    g3 = cone(
        MixedGraph(("a", "b"), [und("a", "b")]),
        "w",
        {"a": "undirected", "b": "into_tip"},
    )
    assert g3 == MixedGraph(
        ("a", "b", "w"), [und("a", "b"), und("a", "w"), arc("b", "w")]
    )


def test_cone_errors():
    base = MixedGraph(("a", "b"))
    with pytest.raises(DuplicateVertexError):
        cone(base, "a", {"a": "undirected", "b": "undirected"})
    with pytest.raises(MissingKindError):
        cone(base, "w", {"a": "undirected"})
    with pytest.raises(UnknownVertexError):
        cone(base, "w", {"a": "undirected", "b": "undirected", "zz": "undirected"})


@given(mixed_graphs(max_n=5))
def test_cone_adds_one_edge_per_vertex_and_tip_is_universal(g):
    kinds = {v: "undirected" for v in g.vertices}
    coned = cone(g, "tip", kinds)
    assert len(coned.edges) == len(g.edges) + len(g.vertices)
    assert coned.is_universal("tip")


def test_link():
    assert link(graph_p4(), "b") == {"a", "c"}
    assert link(MixedGraph(("a", "b")), "a") == frozenset()
    s = parse_graph("vertices w a b c\nedge w - a\nedge b > w\nedge w > c\n")
    # direction never matters for adjacency
    assert link(s, "w") == {"a", "b", "c"}


def test_components():
    g = parse_graph("vertices a b c\nedge a - b")
    assert components(g) == [("a", "b"), ("c",)]
    assert components(graph_c4()) == [("a", "b", "c", "d")]
    assert components(MixedGraph(("a", "b", "c"))) == [("a",), ("b",), ("c",)]


def test_enumerate_counts():
    assert len(list(enumerate_mixed_graphs(1))) == 1
    assert len(list(enumerate_mixed_graphs(2))) == 4
    graphs = list(enumerate_mixed_graphs(3))
    assert len(graphs) == 64
    assert len(set(graphs)) == 64


def test_enumerate_four_vertices_distinct():
    graphs = set(enumerate_mixed_graphs(4))
    assert len(graphs) == 4096


def test_enumerate_size_limit():
    with pytest.raises(SizeLimitError):
        enumerate_mixed_graphs(0)
    with pytest.raises(SizeLimitError):
        enumerate_mixed_graphs(6)


def test_random_graph_helper_is_valid(rng):
    for n in range(1, 8):
        g = random_mixed_graph(rng, n)
        assert len(g.vertices) == n
        serialize_graph(g)


def test_edge_helpers():
    e = arc("a", "b")
    assert e.other("a") == "b" and e.other("b") == "a"
    with pytest.raises(ValueError):
        e.other("c")
    with pytest.raises(ValueError):
        und("a", "b").origin
    with pytest.raises(TypeError):
        MixedGraph(("a", "b"), [("a", "b")])
