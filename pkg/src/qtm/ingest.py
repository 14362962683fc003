"""Reading and writing trend models.

Two sources are supported: the line-oriented ``.qtm`` model language, and
numeric correlation matrices in CSV form, whose signs map to INC/DEC
relations weighted by the coefficient magnitudes.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    DiagonalNotUnitError,
    DuplicateVariableError,
    EntryOutOfRangeError,
    MatrixFormatError,
    NotSquareError,
    NotSymmetricError,
    ParseError,
    SelfRelationError,
    UnknownRelationTypeError,
)
from .model import (
    Coupling,
    Desire,
    Polarity,
    Relation,
    RelationType,
    TrendModel,
    Variable,
)
from .signs import SignSet

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_MATRIX_TOL = 1e-9

_DESIRE_TOKENS = {d.value: d for d in Desire}
_POLARITY_TOKENS = {p.value: p for p in Polarity}
_COUPLING_TOKENS = {c.value: c for c in Coupling}


def parse_model(text: str) -> TrendModel:
    """Parse model text into a :class:`TrendModel`.

    Blank lines and ``#`` comments are ignored.  Directives
    ``@polarity``, ``@coupling`` and ``@var`` may appear anywhere and
    apply to the whole model; relation lines read ``TYPE X Y [w=REAL]``.
    Relation endpoints that were never declared with ``@var`` are
    declared implicitly, after the explicit ones, in order of first use.
    """
    polarity = Polarity.STANDARD
    coupling = Coupling.WEAK
    explicit: dict[str, Variable] = {}
    implicit: dict[str, None] = {}
    relations: list[Relation] = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head.startswith("@"):
            directive = head.lower()
            if directive == "@polarity":
                polarity = _keyword(tokens, _POLARITY_TOKENS, lineno, "@polarity")
            elif directive == "@coupling":
                coupling = _keyword(tokens, _COUPLING_TOKENS, lineno, "@coupling")
            elif directive == "@var":
                var = _parse_var(tokens, lineno)
                if var.name in explicit:
                    raise DuplicateVariableError(
                        f"line {lineno}: variable {var.name} declared twice"
                    )
                explicit[var.name] = var
            else:
                raise ParseError(f"unknown directive {head}", lineno)
        else:
            relations.append(_parse_relation(tokens, lineno, implicit))

    variables = list(explicit.values())
    variables.extend(
        Variable(name) for name in implicit if name not in explicit
    )
    return TrendModel(
        variables=tuple(variables),
        relations=tuple(relations),
        polarity=polarity,
        coupling=coupling,
    )


def _keyword(tokens, table, lineno, directive):
    if len(tokens) != 2:
        raise ParseError(f"{directive} takes exactly one argument", lineno)
    try:
        return table[tokens[1].lower()]
    except KeyError:
        choices = "|".join(table)
        raise ParseError(
            f"{directive} argument must be {choices}, got {tokens[1]!r}", lineno
        ) from None


def _parse_var(tokens, lineno) -> Variable:
    if len(tokens) < 2:
        raise ParseError("@var needs a variable name", lineno)
    name = tokens[1]
    if not _NAME_RE.match(name):
        raise ParseError(f"invalid variable name {name!r}", lineno)
    domain = None
    desire = Desire.NEUTRAL
    for token in tokens[2:]:
        key, sep, value = token.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {token!r}", lineno)
        if key == "value":
            try:
                domain = SignSet.parse(value)
            except ValueError as exc:
                raise ParseError(f"bad value domain {value!r}: {exc}", lineno) from None
        elif key == "desire":
            try:
                desire = _DESIRE_TOKENS[value.lower()]
            except KeyError:
                raise ParseError(
                    f"desire must be inc|dec|neutral, got {value!r}", lineno
                ) from None
        else:
            raise ParseError(f"unknown @var option {key!r}", lineno)
    if domain is None:
        return Variable(name, desire=desire)
    return Variable(name, value_domain=domain, desire=desire)


def _parse_relation(tokens, lineno, implicit: dict[str, None]) -> Relation:
    if len(tokens) not in (3, 4):
        raise ParseError(
            f"relation line must read TYPE X Y [w=REAL], got {len(tokens)} tokens", lineno
        )
    try:
        rtype = RelationType[tokens[0].upper()]
    except KeyError:
        raise UnknownRelationTypeError(
            f"unknown relation type {tokens[0]!r}", lineno
        ) from None
    x, y = tokens[1], tokens[2]
    for name in (x, y):
        if not _NAME_RE.match(name):
            raise ParseError(f"invalid variable name {name!r}", lineno)
    if x == y:
        raise SelfRelationError(f"line {lineno}: relation relates {x} to itself")
    weight = None
    if len(tokens) == 4:
        key, sep, value = tokens[3].partition("=")
        if key != "w" or not sep:
            raise ParseError(f"expected w=REAL, got {tokens[3]!r}", lineno)
        try:
            weight = float(value)
        except ValueError:
            raise ParseError(f"bad weight {value!r}", lineno) from None
        if weight < 0:
            raise ParseError(f"weight must be nonnegative, got {value}", lineno)
    implicit.setdefault(x)
    implicit.setdefault(y)
    return Relation(rtype, x, y, weight=weight)


def serialize_model(model: TrendModel) -> str:
    """Write a model as ``.qtm`` text; ``parse_model`` inverts this exactly."""
    lines = [
        f"@polarity {model.polarity.value}",
        f"@coupling {model.coupling.value}",
    ]
    for var in model.variables:
        parts = [f"@var {var.name}", f"value={var.value_domain}"]
        if var.desire is not Desire.NEUTRAL:
            parts.append(f"desire={var.desire.value}")
        lines.append(" ".join(parts))
    for rel in model.relations:
        parts = [rel.rtype.value, rel.x, rel.y]
        if rel.weight is not None:
            parts.append(f"w={rel.weight!r}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def load_model(path: str | Path) -> TrendModel:
    """Parse a ``.qtm`` file (UTF-8; LF or CRLF line endings)."""
    return parse_model(Path(path).read_text(encoding="utf-8"))


def save_model(model: TrendModel, path: str | Path) -> None:
    Path(path).write_text(serialize_model(model), encoding="utf-8")


@dataclass(frozen=True)
class CorrelationMatrix:
    """A validated square correlation matrix with named variables."""

    names: tuple[str, ...]
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(
            self, "entries", np.asarray(self.entries, dtype=float)
        )
        n = len(self.names)
        if self.entries.shape != (n, n):
            raise NotSquareError(
                f"expected a {n}x{n} matrix, got shape {self.entries.shape}"
            )
        if not np.allclose(self.entries, self.entries.T, rtol=0, atol=_MATRIX_TOL):
            raise NotSymmetricError("matrix is not symmetric")
        if not np.allclose(np.diag(self.entries), 1.0, rtol=0, atol=_MATRIX_TOL):
            raise DiagonalNotUnitError("matrix diagonal is not all ones")
        if np.any(np.abs(self.entries) > 1.0 + _MATRIX_TOL):
            raise EntryOutOfRangeError("matrix entries must lie in [-1, 1]")


def read_correlation_csv(path: str | Path) -> CorrelationMatrix:
    """Read a correlation matrix from a CSV file."""
    return parse_correlation_csv(Path(path).read_text(encoding="utf-8"))


def parse_correlation_csv(text: str) -> CorrelationMatrix:
    """Parse correlation CSV text.

    Row one holds the n variable names; each following row holds a name
    and n coefficients.  Row names must repeat the header order.
    """
    reader = csv.reader(io.StringIO(text))
    table = [row for row in reader if row and any(cell.strip() for cell in row)]
    if not table:
        raise MatrixFormatError("empty correlation CSV")
    names = [cell.strip() for cell in table[0] if cell.strip()]
    n = len(names)
    if len(table) != n + 1:
        raise NotSquareError(f"expected {n} data rows for {n} names, got {len(table) - 1}")
    entries = np.empty((n, n), dtype=float)
    for i, row in enumerate(table[1:]):
        cells = [cell.strip() for cell in row]
        if len(cells) != n + 1:
            raise NotSquareError(
                f"row {i + 2}: expected name plus {n} entries, got {len(cells)} cells"
            )
        if cells[0] != names[i]:
            raise MatrixFormatError(
                f"row {i + 2}: name {cells[0]!r} does not match header {names[i]!r}"
            )
        for j, cell in enumerate(cells[1:]):
            try:
                entries[i, j] = float(cell)
            except ValueError:
                raise MatrixFormatError(
                    f"row {i + 2}: not a number: {cell!r}"
                ) from None
    return CorrelationMatrix(tuple(names), entries)


def from_correlation(matrix: CorrelationMatrix, threshold: float = 0.0) -> TrendModel:
    """Map coefficient signs to INC/DEC relations weighted by magnitude.

    Each upper-triangle coefficient beyond the threshold in magnitude
    becomes one relation; everything else carries no information and is
    omitted.
    """
    if threshold < 0:
        raise ValueError(f"threshold must be nonnegative, got {threshold}")
    variables = tuple(Variable(name) for name in matrix.names)
    relations = []
    n = len(matrix.names)
    for i in range(n):
        for j in range(i + 1, n):
            c = float(matrix.entries[i, j])
            if abs(c) <= threshold:
                continue
            rtype = RelationType.INC if c > 0 else RelationType.DEC
            relations.append(
                Relation(rtype, matrix.names[i], matrix.names[j], weight=abs(c))
            )
    return TrendModel(variables=variables, relations=tuple(relations))
