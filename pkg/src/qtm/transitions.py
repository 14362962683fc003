"""Time transitions between scenarios.

The one-dimensional table below lists, for each of the 27 qualitative
states of a single variable, the states it can move to next.  Moves are
smooth: no slot ever skips over 0, no state transitions to itself, and a
variable only changes value sign through a zero-valued intermediate.
Multi-variable transitions compose per variable, each one either holding
its state or making a legal one-dimensional move.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import UnknownNodeError
from .model import Triplet
from .solver import ScenarioSet

# (source, targets) in display order of the sources: positive-valued,
# negative-valued, then zero-valued variables.
_TABLE_ROWS: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("+++", ("++0",)),
    ("++0", ("+++", "++-")),
    ("++-", ("++0", "+0-", "+00")),
    ("+0+", ("+++",)),
    ("+00", ("+++", "+--")),
    ("+0-", ("+--",)),
    ("+-+", ("+-0", "+0+", "+00", "0-+", "00+", "000", "0-0")),
    ("+-0", ("+-+", "+--", "0-0")),
    ("+--", ("+-0", "0--", "0-0")),
    ("-++", ("-+0", "0++", "0+0")),
    ("-+0", ("-+-", "-++", "0+0")),
    ("-+-", ("-+0", "-0-", "-00", "0+-", "00-", "000", "0+0")),
    ("-0+", ("-++",)),
    ("-00", ("-++", "---")),
    ("-0-", ("---",)),
    ("--+", ("--0", "-0+", "-00")),
    ("--0", ("---", "--+")),
    ("---", ("--0",)),
    ("0++", ("++0", "+++")),
    ("0+0", ("++0", "++-", "+++")),
    ("0+-", ("++-",)),
    ("00+", ("+++",)),
    ("000", ("+++", "---")),
    ("00-", ("---",)),
    ("0-+", ("--+",)),
    ("0-0", ("--0", "--+", "---")),
    ("0--", ("--0", "---")),
)

#: One-dimensional transition table over all 27 triplets.
TRANSITION_TABLE: dict[Triplet, frozenset[Triplet]] = {
    Triplet.parse(src): frozenset(Triplet.parse(t) for t in targets)
    for src, targets in _TABLE_ROWS
}


def one_dim_transitions(t: Triplet) -> frozenset[Triplet]:
    """States a single variable in state ``t`` can move to next."""
    return TRANSITION_TABLE[t]


@dataclass
class TransitionGraph:
    """Directed graph over a scenario set; arcs are admissible moves."""

    scenario_set: ScenarioSet
    arcs: tuple[tuple[int, int], ...]

    @cached_property
    def successors(self) -> dict[int, tuple[int, ...]]:
        succ: dict[int, list[int]] = {s.index: [] for s in self.scenario_set}
        for a, b in self.arcs:
            succ[a].append(b)
        return {i: tuple(sorted(targets)) for i, targets in succ.items()}

    @property
    def node_indices(self) -> tuple[int, ...]:
        return tuple(s.index for s in self.scenario_set)

    def _require_node(self, index: int) -> None:
        if index not in self.successors:
            raise UnknownNodeError(f"no scenario with index {index}")


def build_graph(sset: ScenarioSet) -> TransitionGraph:
    """Connect scenarios that differ by one simultaneous smooth step.

    An arc a -> b (a != b) exists iff every variable either keeps its
    triplet or moves along the one-dimensional table.
    """
    scenarios = list(sset)
    arcs: list[tuple[int, int]] = []
    for a in scenarios:
        for b in scenarios:
            if a.index == b.index:
                continue
            if all(
                ta == tb or tb in TRANSITION_TABLE[ta]
                for ta, tb in zip(a.triplets, b.triplets)
            ):
                arcs.append((a.index, b.index))
    return TransitionGraph(sset, tuple(sorted(arcs)))


def terminals(graph: TransitionGraph) -> list[int]:
    """Indices of scenarios with no outgoing arcs, ascending."""
    return [i for i in sorted(graph.successors) if not graph.successors[i]]


def paths(
    graph: TransitionGraph, start: int, end: int, max_len: int
) -> list[list[int]]:
    """All simple paths from start to end of at most ``max_len`` arcs.

    Returned in lexicographic order.  ``start == end`` yields the single
    zero-length path.
    """
    graph._require_node(start)
    graph._require_node(end)
    if max_len < 1:
        raise ValueError(f"max_len must be at least 1, got {max_len}")
    if start == end:
        return [[start]]
    found: list[list[int]] = []
    trail = [start]
    on_trail = {start}

    def walk(node: int) -> None:
        if len(trail) > max_len:
            return
        for succ in graph.successors[node]:
            if succ == end:
                found.append(trail + [end])
            elif succ not in on_trail:
                trail.append(succ)
                on_trail.add(succ)
                walk(succ)
                on_trail.remove(succ)
                trail.pop()

    walk(start)
    return found


def cycles(graph: TransitionGraph) -> list[list[int]]:
    """All elementary cycles, each written from its smallest index.

    Cycles are discovered from ascending root nodes over the subgraph of
    indices >= root, so each cycle is reported exactly once and the
    output order is deterministic.
    """
    result: list[list[int]] = []
    for root in sorted(graph.successors):
        trail = [root]
        on_trail = {root}

        def walk(node: int) -> None:
            for succ in graph.successors[node]:
                if succ == root:
                    result.append(list(trail))
                elif succ > root and succ not in on_trail:
                    trail.append(succ)
                    on_trail.add(succ)
                    walk(succ)
                    on_trail.remove(succ)
                    trail.pop()

        walk(root)
    return result


def reachable(graph: TransitionGraph, start: int) -> set[int]:
    """Indices reachable from ``start``, including ``start`` itself."""
    graph._require_node(start)
    seen = {start}
    frontier = [start]
    while frontier:
        node = frontier.pop()
        for succ in graph.successors[node]:
            if succ not in seen:
                seen.add(succ)
                frontier.append(succ)
    return seen


def to_dot(graph: TransitionGraph, name: str = "scenarios") -> str:
    """Render the graph in DOT, nodes labelled with index and triplets."""
    lines = [f"digraph {name} {{"]
    for scn in graph.scenario_set:
        label = f"{scn.index}: " + " ".join(scn.as_strings())
        lines.append(f'  s{scn.index} [label="{label}"];')
    for a, b in graph.arcs:
        lines.append(f"  s{a} -> s{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
