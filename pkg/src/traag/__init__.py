"""Twisted right-angled Artin groups from mixed defining graphs.

A mixed graph presents a group: each vertex is a generator, an undirected
edge {a, b} imposes the commutation ab = ba, and a directed edge from a to b
imposes the Klein relation aba = b.  This package provides the graph format
and constructions, a word engine with normal forms and an independent
brute-force oracle, the graph classifiers the decidability theorems reduce
to, the index-2 subgroup transform at a universal vertex, per-graph
decidability reports, and a CLI over all of it.
"""

from .classify import (
    Cone,
    Leaf,
    Union,
    decomposition_to_obj,
    find_chordless_cycle,
    find_induced_c4,
    find_induced_p4,
    is_chordal,
    is_in_class_r,
    is_transitive_forest,
    replay_decomposition,
)
from .errors import (
    ApexShapeError,
    DuplicateVertexError,
    InternalDisagreementError,
    MissingKindError,
    NotInSubgroupError,
    NotUniversalError,
    ParseError,
    PreconditionError,
    SizeLimitError,
    TraagError,
    UnknownEdgeError,
    UnknownGeneratorError,
    UnknownVertexError,
)
from .graphs import (
    INTO_TIP,
    UNDIRECTED,
    Edge,
    MixedGraph,
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
from .report import (
    DECIDABLE,
    OPEN,
    UNDECIDABLE,
    BatchResult,
    PropertyReport,
    analyze,
    batch_analyze,
    batch_analyze_paths,
    render_text,
    report_to_obj,
)
from .subgroups import (
    FIXED,
    INVERTED,
    SHIFTED,
    PresentationVerification,
    RelatorCheck,
    SemidirectAction,
    SubgroupGraphResult,
    apex_subgroup_graph,
    in_index2_subgroup,
    rewrite_into_subgroup,
    semidirect_action,
    substitute,
    verify_subgroup_presentation,
)
from .words import (
    IDENTITY,
    Syllable,
    Word,
    bfs_equivalence_class,
    concat,
    conjugate,
    equals,
    free_reduce,
    invert,
    is_identity,
    normal_form,
    parse_word,
    relator,
    serialize_word,
    square_map,
    swap_adjacent,
)

__version__ = "0.1.0"
