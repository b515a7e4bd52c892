"""Dynamic-extension reasoning for abstract argumentation frameworks.

Core objects: frameworks, extension semantics (adm, com, prf, sem, stb),
and four parameterized decision problems about moving between extensions
(small, repair, adjust, center), with three solver engines, reduction
generators, exchange formats, a CLI, and a benchmark harness.
"""

from .core import (
    ArgumentSet,
    ArgumentationFramework,
    Semantics,
    distance,
    is_admissible,
    is_complete,
    is_conflict_free,
    is_stable,
    max_degree,
    range_of,
)
from .enumeration import (
    DEFAULT_ENUM_CAP,
    enumerate_extensions,
    is_preferred,
    is_semistable,
)
from .errors import (
    ArgudynError,
    CapExceeded,
    DuplicateArgument,
    InvalidArity,
    IoError,
    NotAnExtension,
    NotThreeCnfTwo,
    OddK,
    ParseError,
    UnboundVariable,
    UndeclaredArgument,
    UnsupportedSemantics,
)
from .formats import (
    load_cnf,
    load_framework,
    parse_apx,
    parse_dimacs_cnf,
    parse_tgf,
    write_apx,
    write_dimacs_cnf,
    write_tgf,
)
from .gadgets import (
    GadgetOutput,
    KPartiteGraph,
    ThreeCnfTwoFormula,
    cnf,
    even_k_duplicate,
    gen_adjust_from_small,
    gen_center_from_small,
    gen_cnf_adjust,
    gen_cnf_center,
    gen_cnf_small,
    gen_mcq_small,
    has_multicolored_clique,
    kpartite,
    random_kpartite,
    random_three_cnf_two,
    sat_oracle,
)
from .instances import (
    ProblemInstance,
    ProblemKind,
    adjust_instance,
    center_instance,
    repair_instance,
    small_instance,
)
from .solvers import (
    SolveResult,
    SolveStats,
    solve_adjust,
    solve_center,
    solve_instance,
    solve_repair,
    solve_repair_branching,
    solve_small,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentationFramework",
    "ArgumentSet",
    "Semantics",
    "distance",
    "is_admissible",
    "is_complete",
    "is_conflict_free",
    "is_stable",
    "is_preferred",
    "is_semistable",
    "max_degree",
    "range_of",
    "DEFAULT_ENUM_CAP",
    "enumerate_extensions",
    "ArgudynError",
    "CapExceeded",
    "DuplicateArgument",
    "InvalidArity",
    "IoError",
    "NotAnExtension",
    "NotThreeCnfTwo",
    "OddK",
    "ParseError",
    "UnboundVariable",
    "UndeclaredArgument",
    "UnsupportedSemantics",
    "load_cnf",
    "load_framework",
    "parse_apx",
    "parse_dimacs_cnf",
    "parse_tgf",
    "write_apx",
    "write_dimacs_cnf",
    "write_tgf",
    "GadgetOutput",
    "KPartiteGraph",
    "ThreeCnfTwoFormula",
    "cnf",
    "even_k_duplicate",
    "gen_adjust_from_small",
    "gen_center_from_small",
    "gen_cnf_adjust",
    "gen_cnf_center",
    "gen_cnf_small",
    "gen_mcq_small",
    "has_multicolored_clique",
    "kpartite",
    "random_kpartite",
    "random_three_cnf_two",
    "sat_oracle",
    "ProblemInstance",
    "ProblemKind",
    "adjust_instance",
    "center_instance",
    "repair_instance",
    "small_instance",
    "SolveResult",
    "SolveStats",
    "solve_adjust",
    "solve_center",
    "solve_instance",
    "solve_repair",
    "solve_repair_branching",
    "solve_small",
    "__version__",
]
