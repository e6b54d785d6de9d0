"""Chordal and supersolvable binary matroids: closures, circuits, chords,
modular flats, M-chains, S-graphs and S-labelings of chordal graphs."""

from .catalog import (
    AnalysisReport,
    CatalogEntry,
    analyze,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    enumerate_simple_binary,
    fano,
    fan_graph,
    path_graph,
    small_graphs,
    u24,
)
from .chordality import (
    ChordWitness,
    EquivalenceReport,
    delta_closure,
    equivalence_report,
    find_chord,
    is_chordal,
    is_ell_chordal,
    is_ell_closed,
)
from .errors import *  # noqa: F401,F403
from .gf2 import GF2Matrix, GF2Vector, in_column_span, null_space, rank
from .graphs import (
    LabeledGraph,
    SGraph,
    cocycle_matroid,
    cone,
    cycle_matroid,
    derived_sgraph,
    graphs_isomorphic,
    is_chordal_graph,
    s_labelings,
    sgraph_of,
    slabel_to_mchain,
    subgraph_embedding_check,
)
from .matroid import (
    BinaryMatroid,
    CircuitFamily,
    Flat,
    FlatLattice,
    GeneralMatroid,
    general_from_circuits,
)
from .supersolvable import (
    MChain,
    MPartition,
    all_mchains,
    deformation_path,
    find_mchain,
    is_elementary_deformation,
    is_modular_flat,
    is_modular_pair,
    mpartition,
    restrict_chain,
)

__version__ = "0.1.0"
