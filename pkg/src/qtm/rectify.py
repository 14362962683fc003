"""Optimal repair of over-restrictive models by removing relation rows.

A restrictive model admits no dynamic behaviour.  Rectification searches
the subsets of relation rows whose removal re-admits dynamic scenarios
and returns every optimal one, either by fewest rows removed (O1) or by
least total weight removed (O2).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .errors import NoRectificationPossibleError
from .model import TrendModel
from .solver import is_restrictive

_COST_TOL = 1e-9


class Objective(enum.Enum):
    O1 = "o1"  # fewest rows removed
    O2 = "o2"  # least total weight removed


@dataclass(frozen=True)
class RemovalSet:
    """A certificate: deleting these 1-based rows yields a dynamic model."""

    rows: tuple[int, ...]
    cost: float

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(sorted(self.rows)))


def apply_removal(model: TrendModel, removal: RemovalSet | Iterable[int]) -> TrendModel:
    """New model with the given relation rows deleted; variables untouched."""
    rows = removal.rows if isinstance(removal, RemovalSet) else tuple(removal)
    w = len(model.relations)
    for index in rows:
        if not 1 <= index <= w:
            raise IndexError(f"relation row {index} out of range 1..{w}")
    drop = set(rows)
    kept = tuple(rel for i, rel in enumerate(model.relations, 1) if i not in drop)
    return replace(model, relations=kept)


def _row_weights(model: TrendModel) -> list[float]:
    # missing weights count 1.0 so a weightless model reduces O2 to O1
    return [rel.weight if rel.weight is not None else 1.0 for rel in model.relations]


def rectify(model: TrendModel, objective: Objective = Objective.O1) -> list[RemovalSet]:
    """All optimal removal sets making the model non-restrictive.

    A model that is already non-restrictive yields one empty removal set.
    Every returned set is inclusion-minimal, and ties are reported in
    full, ordered lexicographically by row indices.
    """
    if not is_restrictive(model):
        return [RemovalSet((), 0.0)]
    weights = _row_weights(model)
    w = len(model.relations)

    def works(rows: Sequence[int]) -> bool:
        return not is_restrictive(apply_removal(model, rows))

    if objective is Objective.O1:
        for k in range(1, w + 1):
            hits = [rows for rows in itertools.combinations(range(1, w + 1), k) if works(rows)]
            if hits:
                return [
                    RemovalSet(rows, sum(weights[i - 1] for i in rows)) for rows in hits
                ]
        raise NoRectificationPossibleError(
            "no removal of relation rows admits a dynamic scenario"
        )

    candidates = sorted(
        (
            (sum(weights[i - 1] for i in rows), rows)
            for k in range(1, w + 1)
            for rows in itertools.combinations(range(1, w + 1), k)
        ),
        key=lambda item: (item[0], len(item[1]), item[1]),
    )
    best: float | None = None
    hits = []
    for cost, rows in candidates:
        if best is not None and cost > best + _COST_TOL:
            break
        if works(rows):
            if best is None:
                best = cost
            hits.append((cost, rows))
    if best is None:
        raise NoRectificationPossibleError(
            "no removal of relation rows admits a dynamic scenario"
        )
    minimal = [
        (cost, rows)
        for cost, rows in hits
        if all(not works([i for i in rows if i != r]) for r in rows)
    ]
    return [RemovalSet(rows, cost) for cost, rows in sorted(minimal, key=lambda h: h[1])]
