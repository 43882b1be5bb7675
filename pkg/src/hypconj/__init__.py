"""Conjugacy and centralisers of finite lists in word-hyperbolic groups."""

from .context import Caps, Constants, GroupContext, derive_constants, free_group, free_product, load_group, parse_group
from .errors import (
    ArgumentError,
    BudgetError,
    CapReached,
    ConfigError,
    HypConjError,
    InconsistencyError,
    ParseError,
)
from .list_solver import (
    CentraliserResult,
    ListOutcome,
    ProgressionFamily,
    Status,
    centraliser_lists,
    solve_lists,
)
from .single_conjugacy import ConjugatorFamily, conj_candidates
from .words import Alphabet, Word

__all__ = [
    "Alphabet", "ArgumentError", "BudgetError", "CapReached", "Caps", "CentraliserResult",
    "ConfigError", "ConjugatorFamily", "Constants", "GroupContext", "HypConjError",
    "InconsistencyError", "ListOutcome", "ParseError", "ProgressionFamily", "Status", "Word",
    "centraliser_lists", "conj_candidates", "derive_constants", "free_group", "free_product",
    "load_group", "parse_group", "solve_lists",
]
