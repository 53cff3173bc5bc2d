"""Enumeration of lamp-row layouts that realize a given state count.

A display with rows of ``m_1, ..., m_k`` lamps (monotone left-fill, so a
row of m lamps shows m+1 states) has ``(m_1+1) * ... * (m_k+1)`` states.
Every ordered factorization of a target state count N into factors >= 2
therefore yields one feasible layout, a factor f contributing a row of
f-1 lamps. Row order matters physically (top rows are more significant),
so factorizations are ordered, not unordered. Factors of 1 would be
zero-lamp rows and are excluded.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import prod

from .codec import RowScheme
from .catalog import make_scheme
from .errors import EnumerationCapError, InvalidSchemeError

DEFAULT_SHAPE_LIMIT = 100_000


class ShapeClass(Enum):
    TRIANGULAR = "TRIANGULAR"
    RECTANGULAR = "RECTANGULAR"
    IRREGULAR = "IRREGULAR"


def classify(lamp_counts: tuple[int, ...]) -> ShapeClass:
    """Geometry of a row layout: triangle, rectangle, or neither."""
    if lamp_counts == tuple(range(1, len(lamp_counts) + 1)):
        return ShapeClass.TRIANGULAR
    if len(lamp_counts) >= 2 and len(set(lamp_counts)) == 1:
        return ShapeClass.RECTANGULAR
    return ShapeClass.IRREGULAR


@dataclass(frozen=True)
class SchemeShape:
    """A row layout by lamp counts (top first) and its geometry."""

    lamp_counts: tuple[int, ...]
    classification: ShapeClass
    total_lamps: int

    @classmethod
    def from_lamp_counts(cls, lamp_counts: tuple[int, ...]) -> "SchemeShape":
        return cls(lamp_counts, classify(lamp_counts), sum(lamp_counts))

    @property
    def state_count(self) -> int:
        return prod(c + 1 for c in self.lamp_counts)


def _divisors_from_2(n: int) -> list[int]:
    """Divisors of n that are >= 2, ascending (n itself included)."""
    small, large = [], []
    d = 2
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)  # descending as d ascends
        d += 1
    return small + large[::-1] + [n]


def enumerate_shapes(
    target_states: int,
    shape_filter: ShapeClass | None = None,
    limit: int = DEFAULT_SHAPE_LIMIT,
) -> list[SchemeShape]:
    """All row layouts with exactly ``target_states`` display states.

    Returns one shape per ordered factorization of ``target_states`` into
    factors >= 2, in lexicographic order of lamp counts, optionally
    restricted to one geometry class. Enumeration (before filtering) is
    capped at ``limit`` shapes; exceeding the cap raises
    :class:`EnumerationCapError`.
    """
    if target_states < 2:
        raise ValueError(f"target_states must be at least 2, got {target_states}")

    divisors = _divisors_from_2(target_states)
    shapes: list[SchemeShape] = []
    produced = 0

    # DFS over ascending divisors emits factor sequences, hence lamp-count
    # tuples, in lexicographic order; no complete sequence is a prefix of
    # another because appending any factor >= 2 overshoots the product.
    def fill(remaining: int, lamps_prefix: tuple[int, ...]) -> None:
        nonlocal produced
        for f in divisors:
            if f > remaining:
                break
            if remaining % f:
                continue
            lamps = lamps_prefix + (f - 1,)
            if f == remaining:
                produced += 1
                if produced > limit:
                    raise EnumerationCapError(
                        f"more than {limit} shapes for target {target_states}"
                    )
                shape = SchemeShape.from_lamp_counts(lamps)
                if shape_filter is None or shape.classification is shape_filter:
                    shapes.append(shape)
            else:
                fill(remaining // f, lamps)

    fill(target_states, ())
    return shapes


def is_triangular_feasible(target_states: int) -> int | None:
    """Row count n such that a triangle of 1..n lamps shows exactly
    ``target_states`` states, i.e. target_states == (n+1)!; None if no
    such n exists."""
    if target_states < 2:
        raise ValueError(f"target_states must be at least 2, got {target_states}")
    fact, n = 2, 1  # (1+1)! with one row
    while fact < target_states:
        n += 1
        fact *= n + 1
    return n if fact == target_states else None


def shape_to_scheme(
    shape: SchemeShape,
    base_unit: int = 1,
    cycle_minutes: int = 720,
    name: str | None = None,
) -> RowScheme:
    """Realize a shape as a concrete, validated scheme.

    The shape's capacity in minutes must cover the requested cycle.
    """
    cap_minutes = shape.state_count * base_unit
    if cap_minutes < cycle_minutes:
        raise InvalidSchemeError(
            f"shape {list(shape.lamp_counts)} covers {cap_minutes} minutes, "
            f"cycle needs {cycle_minutes}"
        )
    if name is None:
        name = "rows-" + "-".join(str(c) for c in shape.lamp_counts)
    return make_scheme(name, shape.lamp_counts, cycle_minutes, base_unit)
