"""Max-point-tolerance graphs: ordering conditions, recognition by search,
certified representations and their verification."""

from .builder import (
    CanonicalSequence,
    ContractError,
    EndpointTag,
    InconsistentOrderError,
    InfeasibleWindowError,
    NotProperOrderingError,
    PrecedenceRelation,
    build_proper_rep,
    canonical_sequence,
    normalize_distinct_points,
    precedes,
    realize_integer,
    realize_mptg,
    realize_unit,
    relation_R1,
    relation_R2,
)
from .families import (
    Fixture,
    fixtures,
    gen_caterpillar_proper_mptg,
    gen_Kmn_mptg,
    gen_Kn_proper_mptg,
    get_fixture,
)
from .graph import (
    AugmentedMatrix,
    Graph,
    GraphFormatError,
    augmented,
    complement,
    induced_subgraph,
    make_caterpillar,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
    make_wheel,
    parse_graph,
)
from .orderings import (
    Witness,
    check_3point,
    check_4point,
    check_5point_1,
    check_5point_2,
    check_6point,
    check_matrix_zero_condition,
    check_nonedge_condition,
    check_proper_maxtol_ordering,
    is_mptg_ordering,
    is_proper_mptg_ordering,
)
from .recognition import (
    RecognitionResult,
    SizeBoundError,
    find_mptg_ordering,
    find_proper_maxtol_ordering,
    find_proper_mptg_ordering,
    is_at_free,
    is_perfect_bruteforce,
)
from .reps import IntervalPointRep, RepresentationError, ToleranceRep
from .svg import render_svg
from .verify import certify, induced_maxtol, induced_mptg, is_proper, is_unit

__version__ = "0.1.0"
