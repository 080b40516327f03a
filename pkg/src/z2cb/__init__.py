"""Binary linear code analysis: exact bounds, constructions, verification."""

from .gf2core import (
    CodeError,
    CodeSummary,
    EmptyCodeError,
    GenMatrix,
    Gf2Word,
    NotInjectiveError,
    add,
    format_matrix,
    min_distance,
    parse_matrix,
    puncture,
    rank,
    shorten,
    systematic_form,
    weight,
    weight_distribution,
)
from .bounds import (
    BoundReport,
    EpsilonZeroError,
    ball_volume,
    combined_upper_bound,
    entropy,
    entropy_bound_rhs,
    griesmer_max_d,
    sphere_packing_max_k,
)
from .codelib import (
    ConstructionRecipe,
    best_known_lower_bound,
    build_base,
    extend_parity,
    lexicode,
    named_code,
    parse_recipe,
    random_search,
    replay_recipe,
)

__all__ = [
    "CodeError",
    "CodeSummary",
    "EmptyCodeError",
    "GenMatrix",
    "Gf2Word",
    "NotInjectiveError",
    "add",
    "format_matrix",
    "min_distance",
    "parse_matrix",
    "puncture",
    "rank",
    "shorten",
    "systematic_form",
    "weight",
    "weight_distribution",
    "BoundReport",
    "EpsilonZeroError",
    "ball_volume",
    "combined_upper_bound",
    "entropy",
    "entropy_bound_rhs",
    "griesmer_max_d",
    "sphere_packing_max_k",
    "ConstructionRecipe",
    "best_known_lower_bound",
    "build_base",
    "extend_parity",
    "lexicode",
    "named_code",
    "parse_recipe",
    "random_search",
    "replay_recipe",
]

__version__ = "0.1.0"
