"""Mixed dominating sets on generalized Petersen graphs P(n,k)."""

from .constructions import (
    ConstructionOutput,
    construct,
    construct_general,
    construct_k1,
    construct_k2_block4,
    construct_k2_block8,
)
from .domination import (
    DominationReport,
    gamma_from_rd,
    greedy_complete,
    naive_lower_bound,
    redomination,
    verify,
)
from .elements import Element, ElementKind, ElementSet
from .errors import (
    InvalidFactor,
    InvalidSpec,
    MixdomError,
    NoSolutionWithin,
    OutOfRange,
    SetFileError,
    UnknownElement,
)
from .formulas import FormulaResult, gamma_k1, gamma_k2, gamma_k2_remark, upper_bound_general
from .petersen import (
    Block,
    BlockDecomposition,
    GraphSpec,
    PetersenGraph,
    build,
    build_graph,
    decompose,
    to_dot,
)
from .solver import OptimalResult, SolveBudget, solve_exact, solve_exhaustive

__version__ = "0.1.0"

__all__ = [
    "Block",
    "BlockDecomposition",
    "ConstructionOutput",
    "DominationReport",
    "Element",
    "ElementKind",
    "ElementSet",
    "FormulaResult",
    "GraphSpec",
    "InvalidFactor",
    "InvalidSpec",
    "MixdomError",
    "NoSolutionWithin",
    "OptimalResult",
    "OutOfRange",
    "PetersenGraph",
    "SetFileError",
    "SolveBudget",
    "UnknownElement",
    "build",
    "build_graph",
    "construct",
    "construct_general",
    "construct_k1",
    "construct_k2_block4",
    "construct_k2_block8",
    "decompose",
    "gamma_from_rd",
    "gamma_k1",
    "gamma_k2",
    "gamma_k2_remark",
    "greedy_complete",
    "naive_lower_bound",
    "redomination",
    "solve_exact",
    "solve_exhaustive",
    "to_dot",
    "upper_bound_general",
    "verify",
]
