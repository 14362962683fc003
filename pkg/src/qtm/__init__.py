"""qtm — qualitative trend models.

Solve three-valued (increasing/constant/decreasing) trend models into
complete scenario sets, detect and optimally repair over-restrictive
models, build transition graphs over the scenarios, and rank scenarios
against desirable trends.
"""

from importlib import resources
from pathlib import Path

from .errors import (
    DiagonalNotUnitError,
    DuplicateVariableError,
    EntryOutOfRangeError,
    MatrixError,
    MatrixFormatError,
    ModelError,
    NeutralDesireError,
    NoObjectivesError,
    NoRectificationPossibleError,
    NotSquareError,
    NotSymmetricError,
    ParseError,
    QtmError,
    SelfRelationError,
    UndeclaredVariableError,
    UnknownNodeError,
    UnknownRelationTypeError,
)
from .signs import SIGNS, Sign, SignSet, qadd, qmul, qneg, sq
from .model import (
    Coupling,
    Desire,
    Polarity,
    Relation,
    RelationType,
    Scenario,
    TrendModel,
    Triplet,
    Variable,
    all_triplets,
    relation_admissible,
    scenario_admissible,
)
from .solver import ScenarioSet, collapse_rows, expand_row, is_restrictive, solve, steady_scenarios
from .rectify import Objective, RemovalSet, apply_removal, rectify
from .transitions import (
    TRANSITION_TABLE,
    TransitionGraph,
    build_graph,
    cycles,
    one_dim_transitions,
    paths,
    reachable,
    terminals,
    to_dot,
)
from .objectives import Grade, ObjectiveReport, ScenarioScore, grade, rank
from .ingest import (
    CorrelationMatrix,
    from_correlation,
    load_model,
    parse_correlation_csv,
    parse_model,
    read_correlation_csv,
    save_model,
    serialize_model,
)

__version__ = "0.1.0"


def fixture_path(name: str) -> Path:
    """Path to a bundled example model or golden file.

    ``fixture_path("case_study")`` resolves the bundled case-study model;
    pass a full file name for non-model fixtures.
    """
    if "." not in name:
        name = f"{name}.qtm"
    return Path(str(resources.files("qtm") / "fixtures" / name))


__all__ = [
    "Sign", "SignSet", "SIGNS", "qneg", "qmul", "qadd", "sq",
    "Desire", "Polarity", "Coupling", "RelationType", "Variable", "Relation",
    "TrendModel", "Triplet", "Scenario", "all_triplets", "relation_admissible",
    "scenario_admissible",
    "ScenarioSet", "solve", "is_restrictive", "steady_scenarios",
    "collapse_rows", "expand_row",
    "Objective", "RemovalSet", "rectify", "apply_removal",
    "TRANSITION_TABLE", "TransitionGraph", "one_dim_transitions", "build_graph",
    "terminals", "paths", "cycles", "reachable", "to_dot",
    "Grade", "ObjectiveReport", "ScenarioScore", "grade", "rank",
    "CorrelationMatrix", "parse_model", "serialize_model", "load_model",
    "save_model", "read_correlation_csv", "parse_correlation_csv", "from_correlation",
    "QtmError", "ModelError", "ParseError", "MatrixError",
    "DuplicateVariableError", "UndeclaredVariableError", "SelfRelationError",
    "UnknownRelationTypeError", "MatrixFormatError", "NotSquareError",
    "NotSymmetricError", "DiagonalNotUnitError", "EntryOutOfRangeError",
    "NoRectificationPossibleError", "UnknownNodeError", "NeutralDesireError",
    "NoObjectivesError",
    "fixture_path",
]
