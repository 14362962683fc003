"""Deterministic text and JSON views of solver results.

Every CLI command builds a JSON-serialisable payload first; the text
renderers consume only those payloads, so re-rendering emitted JSON
reproduces the text output byte for byte.
"""

from __future__ import annotations

from typing import Any, Mapping, Sequence

from .model import TrendModel
from .objectives import Grade, ObjectiveReport
from .rectify import Objective, RemovalSet
from .solver import ScenarioSet, collapse_rows
from .transitions import TransitionGraph

SCHEMA_VERSION = 1

_GRADE_LABEL = {
    Grade.ACCELERATING_MATCH.value: "acc",
    Grade.MATCH.value: "match",
    Grade.MISS.value: "miss",
}


# ── payload builders ────────────────────────────────────────────────


def model_payload(model: TrendModel) -> dict[str, Any]:
    variables = [
        {"name": v.name, "value": str(v.value_domain), "desire": v.desire.value}
        for v in model.variables
    ]
    relations = []
    for rel in model.relations:
        entry: dict[str, Any] = {"type": rel.rtype.value, "x": rel.x, "y": rel.y}
        if rel.weight is not None:
            entry["weight"] = rel.weight
        if rel.coupling is not None:
            entry["coupling"] = rel.coupling.value
        relations.append(entry)
    return {
        "polarity": model.polarity.value,
        "coupling": model.coupling.value,
        "variables": variables,
        "relations": relations,
    }


def _base(command: str, model: TrendModel) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "model": model_payload(model),
    }


def solve_payload(sset: ScenarioSet) -> dict[str, Any]:
    payload = _base("solve", sset.model)
    payload["scenarios"] = [list(scn.as_strings()) for scn in sset]
    return payload


def graph_payload(
    graph: TransitionGraph,
    terminal_indices: Sequence[int],
    path_query: tuple[int, int, int, list[list[int]]] | None = None,
) -> dict[str, Any]:
    sset = graph.scenario_set
    payload = _base("graph", sset.model)
    payload["scenarios"] = [list(scn.as_strings()) for scn in sset]
    payload["transitions"] = [[a, b] for a, b in graph.arcs]
    payload["terminals"] = list(terminal_indices)
    if path_query is not None:
        start, end, max_len, found = path_query
        payload["path_query"] = {"from": start, "to": end, "max_len": max_len}
        payload["paths"] = [list(p) for p in found]
    return payload


def rectify_payload(
    model: TrendModel,
    objective: Objective,
    restrictive: bool,
    removals: Sequence[RemovalSet],
) -> dict[str, Any]:
    payload = _base("rectify", model)
    payload["objective"] = objective.value
    payload["restrictive"] = restrictive
    payload["removals"] = [
        {"rows": list(r.rows), "cost": r.cost} for r in removals
    ]
    return payload


def rank_payload(report: ObjectiveReport, sset: ScenarioSet) -> dict[str, Any]:
    payload = _base("rank", sset.model)
    payload["objectives"] = list(report.objectives)
    payload["grades"] = [
        {
            "scenario": entry.scenario.index,
            "grades": {
                name: g.value for name, g in zip(report.objectives, entry.grades)
            },
            "satisfied": entry.satisfied,
            "accelerating": entry.accelerating,
            "steady": entry.steady,
            "terminal": entry.terminal,
        }
        for entry in report.entries
    ]
    return payload


def check_payload(
    model: TrendModel,
    sset: ScenarioSet,
    restrictive: bool,
    steady_indices: Sequence[int],
) -> dict[str, Any]:
    payload = _base("check", model)
    payload["counts"] = {
        "variables": len(model.variables),
        "relations": len(model.relations),
        "scenarios": len(sset),
    }
    payload["restrictive"] = restrictive
    payload["steady"] = list(steady_indices)
    return payload


def ingest_payload(model: TrendModel, threshold: float) -> dict[str, Any]:
    payload = _base("ingest", model)
    payload["threshold"] = threshold
    return payload


# ── text renderers (payload in, text out) ───────────────────────────


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Align columns: first column right-justified, the rest left."""
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    for row in [headers, *rows]:
        cells = [
            cell.rjust(widths[0]) if i == 0 else cell.ljust(widths[i])
            for i, cell in enumerate(row)
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def _scenario_names(payload: Mapping[str, Any]) -> list[str]:
    return [v["name"] for v in payload["model"]["variables"]]


def _display_rows(scenarios: Sequence[Sequence[str]]) -> list[tuple[str, ...]]:
    flat = [tuple(ch for trip in scn for ch in trip) for scn in scenarios]
    return [
        tuple("".join(row[i : i + 3]) for i in range(0, len(row), 3))
        for row in collapse_rows(flat)
    ]


def solve_text(payload: Mapping[str, Any]) -> str:
    names = _scenario_names(payload)
    rows = _display_rows(payload["scenarios"])
    table = _table(
        [""] + names, [[str(i)] + list(row) for i, row in enumerate(rows, 1)]
    )
    return table + "\n"


def graph_text(payload: Mapping[str, Any]) -> str:
    names = _scenario_names(payload)
    table = _table(
        [""] + names,
        [[str(i)] + list(scn) for i, scn in enumerate(payload["scenarios"], 1)],
    )
    parts = [table, ""]
    transitions = payload["transitions"]
    parts.append(f"transitions ({len(transitions)}):")
    for a, b in transitions:
        parts.append(f"  {a} -> {b}")
    terminals = payload["terminals"]
    parts.append(
        "terminals: " + (" ".join(str(i) for i in terminals) if terminals else "none")
    )
    if "path_query" in payload:
        q = payload["path_query"]
        parts.append("")
        parts.append(f"paths {q['from']} -> {q['to']} (max {q['max_len']} steps):")
        if payload["paths"]:
            for path in payload["paths"]:
                parts.append("  " + " -> ".join(str(i) for i in path))
        else:
            parts.append("  none")
    return "\n".join(parts) + "\n"


def _cost(value: float) -> str:
    return format(value, ".12g")


def rectify_text(payload: Mapping[str, Any]) -> str:
    lines = [f"restrictive: {'yes' if payload['restrictive'] else 'no'}"]
    if not payload["restrictive"]:
        lines.append("nothing to remove")
    else:
        lines.append(f"optimal removals (objective {payload['objective']}):")
        for removal in payload["removals"]:
            rows = ", ".join(str(i) for i in removal["rows"])
            lines.append(f"  remove rows {{{rows}}}  cost {_cost(removal['cost'])}")
    return "\n".join(lines) + "\n"


def rank_text(payload: Mapping[str, Any]) -> str:
    objectives = payload["objectives"]
    headers = [""] + ["scenario"] + objectives + ["satisfied", "accelerating", "flags"]
    rows = []
    for position, entry in enumerate(payload["grades"], 1):
        flags = [name for name in ("steady", "terminal") if entry[name]]
        rows.append(
            [str(position), str(entry["scenario"])]
            + [_GRADE_LABEL[entry["grades"][name]] for name in objectives]
            + [str(entry["satisfied"]), str(entry["accelerating"]), ",".join(flags)]
        )
    header_line = "objectives: " + " ".join(objectives)
    return header_line + "\n\n" + _table(headers, rows) + "\n"


def check_text(payload: Mapping[str, Any]) -> str:
    counts = payload["counts"]
    steady = payload["steady"]
    lines = [
        f"variables: {counts['variables']}",
        f"relations: {counts['relations']}",
        f"scenarios: {counts['scenarios']}",
        f"steady scenarios: {len(steady)} of {counts['scenarios']}",
        f"restrictive: {'yes' if payload['restrictive'] else 'no'}",
    ]
    return "\n".join(lines) + "\n"
