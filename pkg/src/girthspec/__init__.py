"""Short-cycle counting in bipartite graphs.

Counts cycles of length g through 2g-2 either directly from the directed
edge (non-backtracking) matrix or, for connected bi-regular graphs, from
the adjacency spectrum via a quadratic eigenvalue transfer. Brute-force
and closed-form oracles are included for verification.
"""

from .counts import CycleCounts, Route
from .cycle_count import (
    brute_force_counts,
    complete_bipartite_closed_form,
    counts_from_spectrum,
    g_plus_4_cross_check,
    tree_walk_count,
)
from .edge_matrix import (
    DirectedEdgeMatrix,
    EdgeSpectrum,
    build_edge_matrix,
    edge_spectrum_direct,
    multiset_matching_distance,
    trace_power_counts,
)
from .errors import (
    GenerationError,
    GirthspecError,
    NumericalError,
    ParseError,
    RouteInapplicableError,
    SizeCapError,
)
from .graph_core import (
    BipartiteGraph,
    GraphProfile,
    complete_bipartite,
    even_cycle,
    parse_alist,
    parse_edge_list,
    profile,
    random_biregular,
    tesseract,
    write_alist,
    write_edge_list,
)
from .spectra import AdjacencySpectrum, adjacency_spectrum, rank_of_biadjacency
from .spectral_transfer import (
    TransferParameters,
    XiRoots,
    derive_edge_spectrum,
    derive_with_step_totals,
    solve_transfer_quadratic,
)

__version__ = "0.1.0"
