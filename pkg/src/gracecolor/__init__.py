"""Exact graceful coloring toolkit.

Verify graceful colorings of arbitrary graphs, compute graceful chromatic
numbers by exact search, and compute them for complete graphs through the
equivalence with minimal-span 3-AP-free integer sets.
"""

from .ap3 import (
    Ap3Engine,
    Ap3Result,
    SearchStats,
    enumerate_witnesses,
    is_ap3_free,
    longest_ap3_free,
    min_span_ap3_free,
)
from .budget import BudgetExhausted, BudgetMeter, SolveBudget
from .checking import (
    ColoringFormatError,
    GracefulColoring,
    VerificationReport,
    Violation,
    induced_edge_colors,
    parse_coloring,
    verify_graceful,
)
from .complete import CompleteGracefulResult, check_triangle_equivalence, check_complete_equivalence, chi_g_complete
from .graphs import (
    Graph,
    GraphFamily,
    GraphFormatError,
    caterpillar,
    complete,
    complete_bipartite,
    cycle,
    diameter,
    generate,
    is_connected,
    max_degree,
    parse_graph,
    path,
    random_tree,
    regularity,
    serialize_graph,
    star,
    wheel,
)
from .solver import (
    Characterization,
    SolveReport,
    characterize,
    chi_g,
    chromatic_number,
    graceful_lower_bound,
    solve_graceful_decision,
)
from .tables import (
    CacheFormatError,
    KnownValue,
    ValueCache,
    known_chi_g_complete,
    load_cache,
    render_table,
    store_cache,
    table_report,
)

__version__ = "0.1.0"
