"""Past links, path-space verdicts and directed collapse for Euclidean cubical complexes."""

__version__ = "0.1.0"

from .cubes import (  # noqa: E402
    Cube,
    CubicalComplex,
    complex_from_maximal,
    dumps_complex,
    faces,
    interval_restrict,
    leq,
    loads_complex,
    maximal_cofaces,
)
from .simplicial import (  # noqa: E402
    SimplicialComplex,
    LinkStatus,
    contractibility_status,
    is_collapsible,
    is_connected,
    reduced_betti_gf2,
    same_homotopy_class,
)
from .pastlink import past_link, past_links_all  # noqa: E402
from .reachability import (  # noqa: E402
    coreachable_vertices,
    deadlocks,
    reachable_subcomplex,
    reachable_vertices,
    source_vertices,
    stuck_vertices,
    unreachable_vertices,
)
from .collapse import (  # noqa: E402
    CollapseMode,
    apply_collapse,
    candidate_pairs,
    check_directed_collapse,
    greedy_collapse,
    try_collapse,
)
from .analysis import find_obstructions, realize_obstructions, theorem_verdicts  # noqa: E402
from .pv import PVProgram, builtin, forbidden_boxes, state_space_complex  # noqa: E402
from .tikz import export_tikz  # noqa: E402
