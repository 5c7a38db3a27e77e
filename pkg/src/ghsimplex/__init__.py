"""Gromov-Hausdorff distances from finite metric spaces to simplexes,
and the partition-into-smaller-diameter problem they decide."""

from .borsuk import (
    BorsukAnswer,
    DiameterGraph,
    borsuk_decision,
    borsuk_via_gh,
    diameter_graph,
    m_colorable,
    sphere_membership,
)
from .errors import BudgetExceeded, GHSimplexError, InputError
from .metric import (
    ValidatedSpace,
    diameter,
    hausdorff_distance,
    scale_space,
    simplex_space,
    space_from_points,
    validate_space,
)
from .partition import (
    Partition,
    enumerate_partitions,
    objective,
    partition_diameter,
    separation_alpha,
    stirling2,
)
from .solver import (
    GHResult,
    Regime,
    SimplexSpec,
    Strategy,
    branch_and_bound,
    brute_force_min,
    candidate_values,
    gh_to_point,
    gh_to_simplex,
    greedy_upper_bound,
)

__version__ = "0.1.0"
