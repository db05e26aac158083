"""fuzzrel: max-min / min-max fuzzy relational equation systems.

Solving, Chebyshev (L-infinity) approximation of inconsistent systems,
weight-matrix learning from training data, and possibilistic rule-parameter
learning over stacked systems.  Ships a FastAPI service and a thin CLI on
top of the core.
"""

from .chebyshev import (
    ChebyshevReport,
    ShiftedBounds,
    cheb_distance,
    cheb_report,
    godel_gap,
    greatest_approx_solution,
    greatest_cheb_approx,
    is_approx_solution,
    is_approx_solution_subsets,
    is_cheb_approximation,
    minimal_cheb_approximations,
    shifted_bounds,
)
from .consistency import (
    Composition,
    SolutionSet,
    SystemProblem,
    consistent_ceil,
    consistent_ceil_direct,
    consistent_floor,
    extremal_candidate,
    is_consistent,
    potential_greatest,
    potential_lowest,
    solve,
)
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    DomainError,
    EnumerationBudgetExceeded,
    SubsetCapExceeded,
)
from .inequalities import maximal_solutions, minimal_solutions
from .lattice import (
    DEFAULT_CAP,
    DEFAULT_EPS,
    complement,
    eps_max_prod,
    godel_min_prod,
    leq,
    linf_dist,
    maxmin_prod,
    minmax_prod,
    unit_matrix,
    unit_scalar,
    unit_vector,
    veq,
)
from .learning import (
    LearningReport,
    TrainingSet,
    build_approximate_weights,
    build_systems,
    learning_error,
    minimal_learning_error,
)
from .minmax import (
    DualChebyshevReport,
    dual_cheb_distance,
    dual_cheb_distance_direct,
    dual_report,
    eps_gap,
    is_dual_approx_solution,
)
from .rules import (
    RuleInstance,
    RuleLearningResult,
    SolutionIntervals,
    learn_rule_parameters,
    stack_systems,
)

__version__ = "0.1.0"
