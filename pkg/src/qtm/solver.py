"""Complete scenario enumeration for trend models.

``solve`` returns every triplet assignment that satisfies all relations,
as a deterministic, canonically sorted scenario set.  The search is
backtracking over per-variable candidate states after an arc-consistency
pass; the result is defined to equal brute-force enumeration.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .model import (
    Coupling,
    Relation,
    Scenario,
    Sign,
    TrendModel,
    Triplet,
    all_triplets,
    relation_admissible,
)

_SLOT_RANK = {"+": 0, "0": 1, "-": 2, "*": 3}
_EXPANSIONS = {"+": ("+",), "0": ("0",), "-": ("-",), "*": ("+", "0", "-")}


@dataclass
class ScenarioSet:
    """All scenarios of a model, sorted canonically and indexed from 1."""

    model: TrendModel
    scenarios: tuple[Scenario, ...]

    def __iter__(self) -> Iterator[Scenario]:
        return iter(self.scenarios)

    def __len__(self) -> int:
        return len(self.scenarios)

    @cached_property
    def display_rows(self) -> tuple[tuple[str, ...], ...]:
        """Scenarios grouped for display, one 3-symbol string per variable.

        A slot shows ``*`` when all three signs occur with every other
        slot fixed, so expanding the rows regenerates the scenario set
        exactly.
        """
        flat = [
            tuple(ch for t in scn.triplets for ch in str(t))
            for scn in self.scenarios
        ]
        collapsed = collapse_rows(flat)
        return tuple(
            tuple("".join(row[i : i + 3]) for i in range(0, len(row), 3))
            for row in collapsed
        )

    def scenario(self, index: int) -> Scenario:
        if not 1 <= index <= len(self.scenarios):
            raise IndexError(f"scenario index {index} out of range 1..{len(self.scenarios)}")
        return self.scenarios[index - 1]


def collapse_rows(rows: Sequence[tuple[str, ...]]) -> list[tuple[str, ...]]:
    """Merge rows differing in one slot by all three signs into a ``*`` row.

    Runs to a fixpoint, scanning slots right to left so second-derivative
    slots collapse first.  The expansions of the returned rows partition
    the input rows exactly.
    """
    if not rows:
        return []
    nslots = len(rows[0])
    current = set(rows)
    changed = True
    while changed:
        changed = False
        for j in range(nslots - 1, -1, -1):
            groups: dict[tuple, set[str]] = defaultdict(set)
            for row in current:
                groups[(row[:j], row[j + 1 :])].add(row[j])
            for (head, tail), symbols in groups.items():
                if "*" not in symbols and {"+", "0", "-"} <= symbols:
                    for ch in "+0-":
                        current.remove(head + (ch,) + tail)
                    current.add(head + ("*",) + tail)
                    changed = True
    return sorted(current, key=lambda row: tuple(_SLOT_RANK[ch] for ch in row))


def expand_row(row: Sequence[str]) -> list[tuple[str, ...]]:
    """All fully specified rows covered by a display row."""
    expanded: list[tuple[str, ...]] = [()]
    for ch in row:
        expanded = [prefix + (sym,) for prefix in expanded for sym in _EXPANSIONS[ch]]
    return expanded


def solve(model: TrendModel) -> ScenarioSet:
    """Enumerate every admissible scenario of the model.

    Equal, as a set, to filtering the full Cartesian product of candidate
    triplets by every relation; arc consistency and a most-constrained
    variable order keep that tractable for coupled models.
    """
    names = list(model.variable_names)
    domains: dict[str, list[Triplet]] = {
        v.name: list(all_triplets(v.value_domain)) for v in model.variables
    }

    def admissible(rel: Relation, tx: Triplet, ty: Triplet) -> bool:
        return relation_admissible(
            rel, tx, ty, polarity=model.polarity, default_coupling=model.coupling
        )

    touching: dict[str, list[Relation]] = defaultdict(list)
    for rel in model.relations:
        touching[rel.x].append(rel)
        touching[rel.y].append(rel)

    _propagate(model.relations, domains, touching, admissible)
    if any(not dom for dom in domains.values()):
        return ScenarioSet(model, ())

    order = sorted(names, key=lambda n: (-len(touching[n]), names.index(n)))
    assignment: dict[str, Triplet] = {}
    solutions: list[tuple[Triplet, ...]] = []

    def consistent(name: str, t: Triplet) -> bool:
        for rel in touching[name]:
            other = rel.y if rel.x == name else rel.x
            if other not in assignment:
                continue
            tx, ty = (t, assignment[other]) if rel.x == name else (assignment[other], t)
            if not admissible(rel, tx, ty):
                return False
        return True

    def backtrack(depth: int) -> None:
        if depth == len(order):
            solutions.append(tuple(assignment[n] for n in names))
            return
        name = order[depth]
        for t in domains[name]:
            if consistent(name, t):
                assignment[name] = t
                backtrack(depth + 1)
                del assignment[name]

    backtrack(0)
    solutions.sort(key=lambda trips: tuple(t.sort_key() for t in trips))
    scenarios = tuple(
        Scenario(index=i, triplets=trips) for i, trips in enumerate(solutions, 1)
    )
    return ScenarioSet(model, scenarios)


def _propagate(relations, domains, touching, admissible) -> None:
    """AC-3 over the relation arcs: drop candidates with no partner support."""
    queue = deque()
    for rel in relations:
        queue.append((rel, True))
        queue.append((rel, False))
    while queue:
        rel, prune_x = queue.popleft()
        target, support = (rel.x, rel.y) if prune_x else (rel.y, rel.x)
        if prune_x:
            kept = [
                t for t in domains[target]
                if any(admissible(rel, t, u) for u in domains[support])
            ]
        else:
            kept = [
                t for t in domains[target]
                if any(admissible(rel, u, t) for u in domains[support])
            ]
        if len(kept) != len(domains[target]):
            domains[target] = kept
            if not kept:
                return
            # the shrunk domain may remove support from the far side of
            # every other relation touching this variable
            for other_rel in touching[target]:
                if other_rel is not rel:
                    queue.append((other_rel, other_rel.y == target))


def is_restrictive(model: TrendModel) -> bool:
    """True iff the model solves to a nonempty, purely static scenario set.

    Static means every variable's first derivative is ZERO in every
    scenario, i.e. the model admits no dynamic behaviour at all.
    """
    sset = solve(model)
    return bool(sset.scenarios) and all(
        t.d1 is Sign.ZERO for scn in sset for t in scn.triplets
    )


def steady_scenarios(sset: ScenarioSet) -> list[Scenario]:
    """Scenarios that are unchanging in time.

    Judged on the display grouping: a row is steady when every first
    derivative is pinned to 0 and no second derivative is pinned to a
    nonzero sign (it reads 0 or is unrestricted).  A scenario asserting a
    nonzero second derivative at zero slope is an instantaneous extremum,
    not a steady state.
    """
    steady_rows = [
        row
        for row in sset.display_rows
        if all(trip[1] == "0" and trip[2] in "0*" for trip in row)
    ]
    if not steady_rows:
        return []

    def covered(scn: Scenario) -> bool:
        symbols = scn.as_strings()
        for row in steady_rows:
            if all(
                rs == "*" or rs == ss
                for rt, st in zip(row, symbols)
                for rs, ss in zip(rt, st)
            ):
                return True
        return False

    return [scn for scn in sset if covered(scn)]
