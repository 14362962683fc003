"""Scoring scenarios against the variables' desirable trends."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NeutralDesireError, NoObjectivesError
from .model import Desire, Scenario, Sign, Triplet
from .solver import ScenarioSet, steady_scenarios
from .transitions import TransitionGraph, terminals


class Grade(enum.Enum):
    """How well one variable's state serves its desired trend.

    A desired increase is served by a positive first derivative and
    served best when also accelerating (positive second derivative);
    symmetrically for a desired decrease.
    """

    ACCELERATING_MATCH = "accelerating_match"
    MATCH = "match"
    MISS = "miss"


def grade(t: Triplet, desire: Desire) -> Grade:
    """Grade one state against a non-neutral desire."""
    if desire is Desire.NEUTRAL:
        raise NeutralDesireError("cannot grade against a neutral desire")
    wanted = Sign.PLUS if desire is Desire.INCREASE else Sign.MINUS
    if t.d1 is not wanted:
        return Grade.MISS
    return Grade.ACCELERATING_MATCH if t.d2 is wanted else Grade.MATCH


@dataclass(frozen=True)
class ScenarioScore:
    """Grades of one scenario over every objective variable."""

    scenario: Scenario
    grades: tuple[Grade, ...]  # one per objective variable, in order
    steady: bool
    terminal: bool

    @property
    def satisfied(self) -> int:
        return sum(g is not Grade.MISS for g in self.grades)

    @property
    def accelerating(self) -> int:
        return sum(g is Grade.ACCELERATING_MATCH for g in self.grades)


@dataclass(frozen=True)
class ObjectiveReport:
    """Per-scenario objective grades, ranked best first."""

    objectives: tuple[str, ...]
    entries: tuple[ScenarioScore, ...]

    def entry(self, index: int) -> ScenarioScore:
        for e in self.entries:
            if e.scenario.index == index:
                return e
        raise KeyError(f"no scenario with index {index}")

    @property
    def fully_satisfying(self) -> tuple[ScenarioScore, ...]:
        return tuple(e for e in self.entries if e.satisfied == len(self.objectives))


def rank(sset: ScenarioSet, graph: TransitionGraph) -> ObjectiveReport:
    """Grade and order all scenarios against the model's desired trends.

    Ordering is by satisfied count, then accelerating count, then
    scenario index, so the report is a total deterministic order.
    """
    model = sset.model
    objective_vars = model.objective_variables()
    if not objective_vars:
        raise NoObjectivesError("model declares no desirable trends")
    positions = {name: i for i, name in enumerate(model.variable_names)}
    steady = {scn.index for scn in steady_scenarios(sset)}
    terminal = set(terminals(graph))
    scores = []
    for scn in sset:
        grades = tuple(
            grade(scn.triplets[positions[v.name]], v.desire) for v in objective_vars
        )
        scores.append(
            ScenarioScore(
                scenario=scn,
                grades=grades,
                steady=scn.index in steady,
                terminal=scn.index in terminal,
            )
        )
    scores.sort(key=lambda s: (-s.satisfied, -s.accelerating, s.scenario.index))
    return ObjectiveReport(
        objectives=tuple(v.name for v in objective_vars), entries=tuple(scores)
    )
