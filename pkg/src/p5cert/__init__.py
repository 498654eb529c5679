"""Certifying 3-colorability decisions for P5-free graphs.

A P5-free graph is 3-colorable exactly when it contains none of six minimal
obstruction graphs (K4, W5, S1, S2, T, B) as a subgraph.  This package
decides 3-colorability for that class and always returns an independently
checkable witness: a proper 3-colouring, an embedding of one of the six
obstructions, or an induced P5 showing the input was outside the class.
It also ships the machinery to validate the obstruction catalog itself and
to re-derive it by exhaustive isomorph-free enumeration at small orders.
"""

from .canon import CanonicalForm, canonical_form, canonical_labeling
from .catalog import CatalogEntry, ObstructionId, all_entries, export_graph6, get
from .certify import (
    Certificate,
    NotP5Free,
    NotThreeColorable,
    TheoremViolationError,
    ThreeColorable,
    UncolorableNoCertificate,
    certificate_from_json,
    certificate_to_json,
    certify,
    certify_forced,
    verify,
)
from .coloring import Coloring, chromatic_number, k_color, three_color, verify_coloring
from .critical import (
    Mn3p5Report,
    min_degree,
    mn3p5_check,
    mn3p5_check_thorough,
    neighborhood_lemma_holds,
)
from .detect import (
    DominatingStructure,
    P5Witness,
    find_5hole,
    find_dominating_clique_or_p3,
    find_induced_p5,
)
from .enumeration import (
    EnumerationResult,
    connected_graphs,
    enumerate_mn3p5,
    generate_p5free_corpus,
)
from .graphs import (
    CapabilityError,
    Graph,
    GraphFormatError,
    VertexSet,
    complete_graph,
    components,
    cycle_graph,
    empty_graph,
    from_dimacs,
    from_edge_list,
    from_graph6,
    is_connected,
    path_graph,
    to_graph6,
)
from .subiso import Embedding, find_obstruction, find_subgraph, verify_embedding

__version__ = "0.1.0"
