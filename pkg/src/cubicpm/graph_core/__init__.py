from .cuts import (
    ConnectivityReport,
    EdgeCut,
    brute_force_cuts,
    connectivity_report,
    cyclic_small_cuts,
    edge_cut,
    is_bridgeless,
    is_cyclically_4_edge_connected,
    small_cuts,
)
from .enumeration import cubic_bridgeless_multigraphs
from .fileio import format_graph, graph_digest, parse_graph, read_graph
from .generators import (
    b3,
    chain_tail_replace,
    circulant,
    complete,
    complete_bipartite,
    digon_ring,
    generate,
    k4,
    k4_chain,
    k33,
    necklace,
    necklace_block,
    petersen,
    prism,
    triangle_replace,
)
from .iso import IsoClasses, IsoMemo, invariant, is_isomorphic
from .multigraph import CubicMultigraph, Multigraph, as_cubic, build_graph, suppress_degree_two
from .triangles import TriangleRecord, classify_triangles, irrelevant_triangles, is_pruned, short_cycles
