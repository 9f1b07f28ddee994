"""Linear orders respecting every supermajority relation of a ballot profile.

Computes the S-order set (orders respecting the Suzumura-consistent closure
of every supermajority relation) and the T-order set (same with transitive
closures), alongside Schulze, ranked pairs, Kemeny-Young, Borda and
Simpson-Kramer, and checkers for the extended Condorcet criterion and the
Pareto principle.
"""

from ordo._kernels import BACKEND
from ordo.ballots import (
    PreferenceKind,
    Profile,
    StrengthMatrix,
    StrengthRule,
    TallyMatrix,
    VoterPreference,
    parse_profile,
    read_profile,
    strength_matrix,
    tally,
)
from ordo.criteria import CriterionVerdict, condorcet_winner_loser, extended_condorcet_check, pareto_check
from ordo.errors import AgendaError, BallotParseError, ConsistencyError, GuardError, OrdoError
from ordo.methods import (
    PairAgenda,
    WinnerReport,
    borda_ranking,
    default_agenda,
    kemeny_orders,
    ranked_pairs,
    ranked_pairs_outcomes,
    simpson_kramer,
    winner_report,
)
from ordo.ordersets import (
    OrderKind,
    OrderSet,
    WidestPathMatrix,
    constraint_oracle,
    core_order_set,
    order_set,
    s_constraint,
    s_order_set,
    schulze_relation,
    t_constraint,
    t_order_set,
    widest_paths,
)
from ordo.relation import (
    AlternativeSet,
    BinaryRelation,
    LinearOrder,
    RelationProperties,
    asymmetric_part,
    enumerate_respecting_orders,
    maximal_set,
    relation_properties,
    respects,
    suzumura_closure,
    transitive_closure,
)
from ordo.supermajority import AlphaStar, ThresholdLadder, alpha_star, critical_thresholds, r_alpha

__version__ = "0.1.0"

__all__ = [
    "AgendaError",
    "AlphaStar",
    "AlternativeSet",
    "BACKEND",
    "BallotParseError",
    "BinaryRelation",
    "ConsistencyError",
    "CriterionVerdict",
    "GuardError",
    "LinearOrder",
    "OrderKind",
    "OrderSet",
    "OrdoError",
    "PairAgenda",
    "PreferenceKind",
    "Profile",
    "RelationProperties",
    "StrengthMatrix",
    "StrengthRule",
    "TallyMatrix",
    "ThresholdLadder",
    "VoterPreference",
    "WidestPathMatrix",
    "WinnerReport",
    "alpha_star",
    "asymmetric_part",
    "borda_ranking",
    "condorcet_winner_loser",
    "constraint_oracle",
    "core_order_set",
    "critical_thresholds",
    "default_agenda",
    "enumerate_respecting_orders",
    "extended_condorcet_check",
    "kemeny_orders",
    "maximal_set",
    "order_set",
    "pareto_check",
    "parse_profile",
    "r_alpha",
    "ranked_pairs",
    "ranked_pairs_outcomes",
    "read_profile",
    "relation_properties",
    "respects",
    "s_constraint",
    "s_order_set",
    "schulze_relation",
    "simpson_kramer",
    "strength_matrix",
    "suzumura_closure",
    "t_constraint",
    "t_order_set",
    "tally",
    "transitive_closure",
    "widest_paths",
    "winner_report",
]
