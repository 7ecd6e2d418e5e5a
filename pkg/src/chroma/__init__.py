"""chroma: exact desk-scale algorithms for q-colorful graphs.

Colorful minor containment (plain, rooted, folios), linkages, obstruction
set generation, the crucial-property classifier, width parameters, exact
pack/cover duality, and the decoration reduction to plain minor testing.
"""

from .core import (
    CapExceeded,
    Caps,
    ColorfulGraph,
    DEFAULT_CAPS,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
)
from .cgf import CgfError, load_cgf, parse_cgf, save_cgf, serialize_cgf
from .planar import is_planar
from .minor import (
    Folio,
    MinorModel,
    compute_d_folio,
    find_colorful_minor,
    find_rooted_minor,
    has_colorful_minor,
    model_violations,
    solve_wcdp,
    verify_model,
)
from .families import (
    crossing_paths,
    crossing_pattern,
    disk_multiplication,
    make_grid,
    make_wall,
    rainbow,
    segregated_grid,
    universal_family,
)
from .obstructions import (
    ObstructionCatalog,
    generate_obstructions,
    obstruction_count,
    verify_antichain as verify_obstruction_antichain,
)
from .classifier import (
    CrucialReport,
    has_erdos_posa,
    is_crucial,
    rainbow_ep_classification,
)
from .width import (
    TreeDecomposition,
    bidimensionality,
    rainbow_hadwiger,
    rtw_exact,
    sbsg,
    torso,
    treewidth_exact,
    validate_decomposition,
)
from .linkage import Linkage, SeparatorResult, menger, multicolor_linkage
from .duality import (
    HalfIntegralWitness,
    PackCoverResult,
    cover_number,
    enumerate_minimal_models,
    half_integral_witness,
    pack_and_cover,
    pack_number,
    verify_packing,
)
from .reduction import (
    DecoratedGraph,
    MinorAntichain,
    build_minor_antichain,
    decorate,
    reduced_minor_check,
    verify_antichain,
)

__all__ = [
    "CapExceeded",
    "Caps",
    "CgfError",
    "ColorfulGraph",
    "CrucialReport",
    "DEFAULT_CAPS",
    "DecoratedGraph",
    "Folio",
    "HalfIntegralWitness",
    "Linkage",
    "MinorAntichain",
    "MinorModel",
    "ObstructionCatalog",
    "PackCoverResult",
    "SeparatorResult",
    "TreeDecomposition",
    "bidimensionality",
    "build_minor_antichain",
    "complete_bipartite",
    "complete_graph",
    "compute_d_folio",
    "cover_number",
    "crossing_paths",
    "crossing_pattern",
    "cycle_graph",
    "decorate",
    "disk_multiplication",
    "enumerate_minimal_models",
    "find_colorful_minor",
    "find_rooted_minor",
    "generate_obstructions",
    "half_integral_witness",
    "has_colorful_minor",
    "has_erdos_posa",
    "is_crucial",
    "is_planar",
    "load_cgf",
    "make_grid",
    "make_wall",
    "menger",
    "model_violations",
    "multicolor_linkage",
    "obstruction_count",
    "pack_and_cover",
    "pack_number",
    "parse_cgf",
    "path_graph",
    "rainbow",
    "rainbow_ep_classification",
    "rainbow_hadwiger",
    "reduced_minor_check",
    "rtw_exact",
    "save_cgf",
    "sbsg",
    "segregated_grid",
    "serialize_cgf",
    "solve_wcdp",
    "torso",
    "treewidth_exact",
    "universal_family",
    "validate_decomposition",
    "verify_antichain",
    "verify_model",
    "verify_obstruction_antichain",
    "verify_packing",
]

__version__ = "0.1.0"
