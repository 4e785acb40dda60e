"""spincensus: exact combinatorial censuses of theta characteristics,
limit square roots and theta hyperplanes on dual graphs of singular curves."""

from .dual_graph import DualGraph, graph_from_json, graph_to_dot, graph_to_json
from .oracle import (
    QuadraticForm,
    arf,
    arf_census,
    brute_admissible,
    parity_convolve,
)
from .reduction import (
    BaseChangeOrders,
    EllipticTail,
    ReductionGraph,
    SpinCurveCensus,
    TailAutomorphismGroup,
    TwistedSpinFiber,
    base_change_orders,
    reduction_graph,
    spin_curve_census,
    tail_automorphisms,
    twisted_fibers,
)
from .root_census import (
    ParityModel,
    RootCensusEntry,
    admissible_subgraphs,
    class_count,
    count_admissible,
    full_census,
    parity_census,
    satisfies_parity_condition,
    support_multiplicity,
)
from .theta_counts import (
    CensusRow,
    CurveProfile,
    ThetaType,
    census,
    harris_nodal_odd,
    identity_check,
    n_even,
    n_odd,
    theta_count,
    theta_multiplicity,
)

__version__ = "0.1.0"

__all__ = [
    "DualGraph",
    "graph_from_json",
    "graph_to_json",
    "graph_to_dot",
    "ParityModel",
    "RootCensusEntry",
    "satisfies_parity_condition",
    "admissible_subgraphs",
    "count_admissible",
    "class_count",
    "support_multiplicity",
    "parity_census",
    "full_census",
    "CurveProfile",
    "ThetaType",
    "CensusRow",
    "n_odd",
    "n_even",
    "harris_nodal_odd",
    "theta_count",
    "theta_multiplicity",
    "census",
    "identity_check",
    "ReductionGraph",
    "BaseChangeOrders",
    "EllipticTail",
    "TailAutomorphismGroup",
    "TwistedSpinFiber",
    "SpinCurveCensus",
    "reduction_graph",
    "base_change_orders",
    "tail_automorphisms",
    "twisted_fibers",
    "spin_curve_census",
    "QuadraticForm",
    "arf",
    "arf_census",
    "brute_admissible",
    "parity_convolve",
    "__version__",
]
