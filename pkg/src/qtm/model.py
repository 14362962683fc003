"""Trend models: variables, pairwise trend relations, and qualitative states.

A model couples named variables through pairwise relations.  Each relation
either transfers first-derivative signs with a polarity (INC/DEC) or pins
the shape of a monotone dependency between two positive-valued variables
(AG/LG/DG for growth with positive/zero/negative curvature, AD/LD/DD for
decrease with negative/zero/positive curvature).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import (
    DuplicateVariableError,
    SelfRelationError,
    UndeclaredVariableError,
)
from .signs import SIGNS, Sign, SignSet, qadd, qmul, sq


class Desire(enum.Enum):
    """Desirable trend of a variable, if any."""

    INCREASE = "inc"
    DECREASE = "dec"
    NEUTRAL = "neutral"


class Polarity(enum.Enum):
    """Model-wide convention for the direction INC/DEC couple.

    STANDARD reads INC as positive first-derivative coupling; SWAPPED
    exchanges the INC and DEC polarities.  Shape relations are unaffected.
    """

    STANDARD = "standard"
    SWAPPED = "swapped"


class Coupling(enum.Enum):
    """Whether INC/DEC constrain second derivatives too.

    WEAK couples first-derivative signs only; STRONG also transfers the
    second-derivative sign through the relation's polarity.
    """

    WEAK = "weak"
    STRONG = "strong"


class RelationType(enum.Enum):
    INC = "INC"
    DEC = "DEC"
    AG = "AG"
    LG = "LG"
    DG = "DG"
    AD = "AD"
    LD = "LD"
    DD = "DD"

    @property
    def is_shape(self) -> bool:
        """True for the six curvature-constrained relation types."""
        return self not in (RelationType.INC, RelationType.DEC)

    @property
    def curvature(self) -> Sign | None:
        """Sign of the second derivative of y(x); None for INC/DEC."""
        return _CURVATURE[self]


_CURVATURE: dict[RelationType, Sign | None] = {
    RelationType.INC: None,
    RelationType.DEC: None,
    RelationType.AG: Sign.PLUS,
    RelationType.LG: Sign.ZERO,
    RelationType.DG: Sign.MINUS,
    RelationType.AD: Sign.MINUS,
    RelationType.LD: Sign.ZERO,
    RelationType.DD: Sign.PLUS,
}

_GROWING = frozenset(
    {RelationType.INC, RelationType.AG, RelationType.LG, RelationType.DG}
)


def first_derivative_polarity(
    rtype: RelationType, polarity: Polarity = Polarity.STANDARD
) -> Sign:
    """Sign relating the two first derivatives of a relation's endpoints."""
    s1 = Sign.PLUS if rtype in _GROWING else Sign.MINUS
    if polarity is Polarity.SWAPPED and not rtype.is_shape:
        s1 = qmul(s1, Sign.MINUS)
    return s1


class Triplet(NamedTuple):
    """Qualitative state of one variable: (value, first, second derivative)."""

    value: Sign
    d1: Sign
    d2: Sign

    @classmethod
    def parse(cls, text: str) -> "Triplet":
        if len(text) != 3:
            raise ValueError(f"triplet must be three sign symbols, got {text!r}")
        return cls(*(Sign.from_symbol(ch) for ch in text))

    def sort_key(self) -> tuple[int, int, int]:
        return (self.value.rank, self.d1.rank, self.d2.rank)

    def __str__(self) -> str:
        return self.value.symbol + self.d1.symbol + self.d2.symbol


def all_triplets(value_domain: SignSet | None = None) -> tuple[Triplet, ...]:
    """Every triplet over the given value domain, in canonical order."""
    values = SIGNS if value_domain is None else tuple(value_domain)
    return tuple(
        Triplet(v, d1, d2) for v in values for d1 in SIGNS for d2 in SIGNS
    )


#: All 27 triplets over the unrestricted value domain.
TRIPLETS: tuple[Triplet, ...] = all_triplets()


@dataclass(frozen=True)
class Variable:
    """A named model quantity with its admissible value signs."""

    name: str
    value_domain: SignSet = field(default_factory=lambda: SignSet.of(Sign.PLUS))
    desire: Desire = Desire.NEUTRAL

    def __post_init__(self):
        if not self.name:
            raise ValueError("variable name must be nonempty")


@dataclass(frozen=True)
class Relation:
    """One pairwise trend relation; ``x`` is the independent variable."""

    rtype: RelationType
    x: str
    y: str
    weight: float | None = None
    coupling: Coupling | None = None

    def __post_init__(self):
        if self.x == self.y:
            raise SelfRelationError(f"relation {self.rtype.value} relates {self.x} to itself")
        if self.weight is not None and self.weight < 0:
            raise ValueError(f"relation weight must be nonnegative, got {self.weight}")


@dataclass(frozen=True)
class TrendModel:
    """An ordered set of variables plus an ordered list of relations.

    Relation row order is significant: rectification reports removals by
    1-based row index.
    """

    variables: tuple[Variable, ...]
    relations: tuple[Relation, ...] = ()
    polarity: Polarity = Polarity.STANDARD
    coupling: Coupling = Coupling.WEAK

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "relations", tuple(self.relations))
        names = [v.name for v in self.variables]
        seen = set()
        for name in names:
            if name in seen:
                raise DuplicateVariableError(f"variable {name} declared twice")
            seen.add(name)
        for rel in self.relations:
            for endpoint in (rel.x, rel.y):
                if endpoint not in seen:
                    raise UndeclaredVariableError(
                        f"relation endpoint {endpoint} is not a declared variable"
                    )

    @property
    def variable_names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    def variable(self, name: str) -> Variable:
        for v in self.variables:
            if v.name == name:
                return v
        raise UndeclaredVariableError(f"no variable named {name}")

    def effective_coupling(self, rel: Relation) -> Coupling:
        return rel.coupling if rel.coupling is not None else self.coupling

    def objective_variables(self) -> tuple[Variable, ...]:
        return tuple(v for v in self.variables if v.desire is not Desire.NEUTRAL)


def relation_admissible(
    rel: Relation,
    tx: Triplet,
    ty: Triplet,
    *,
    polarity: Polarity = Polarity.STANDARD,
    default_coupling: Coupling = Coupling.WEAK,
) -> bool:
    """Check one relation against a pair of fully specified states.

    ``tx`` is the state of the independent variable ``rel.x`` and ``ty``
    of the dependent ``rel.y``.  Three constraints apply:

    * first derivatives couple through the relation's polarity;
    * for shape relations, the second derivative of y follows the chain
      rule for y(x(t)), whose sign is the qualitative sum of the
      curvature term (over the squared first derivative of x) and the
      polarity-transferred second derivative of x; for INC/DEC the second
      derivative couples only under STRONG;
    * shape relations require both values to be PLUS.
    """
    s1 = first_derivative_polarity(rel.rtype, polarity)
    if ty.d1 is not qmul(s1, tx.d1):
        return False
    if rel.rtype.is_shape:
        if tx.value is not Sign.PLUS or ty.value is not Sign.PLUS:
            return False
        curvature_term = qmul(rel.rtype.curvature, sq(tx.d1))
        allowed = qadd(curvature_term, qmul(s1, tx.d2))
        if ty.d2 not in allowed:
            return False
    else:
        coupling = rel.coupling if rel.coupling is not None else default_coupling
        if coupling is Coupling.STRONG and ty.d2 is not qmul(s1, tx.d2):
            return False
    return True


@dataclass(frozen=True)
class Scenario:
    """One admissible triplet assignment, with its 1-based position."""

    index: int
    triplets: tuple[Triplet, ...]

    def sort_key(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(t.sort_key() for t in self.triplets)

    def as_strings(self) -> tuple[str, ...]:
        return tuple(str(t) for t in self.triplets)


def scenario_admissible(model: TrendModel, triplets: Iterable[Triplet]) -> bool:
    """True iff the assignment satisfies every relation and value domain."""
    by_name = dict(zip(model.variable_names, triplets))
    if len(by_name) != len(model.variables):
        raise ValueError("assignment length differs from variable count")
    for var in model.variables:
        if by_name[var.name].value not in var.value_domain:
            return False
    for rel in model.relations:
        if not relation_admissible(
            rel,
            by_name[rel.x],
            by_name[rel.y],
            polarity=model.polarity,
            default_coupling=model.coupling,
        ):
            return False
    return True
