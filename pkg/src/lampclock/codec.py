"""Clock schemes as mixed-radix numeral systems.

A lamp-row clock is a positional numeral system in disguise: each row of
lamps is one digit, the digit's value is the number of lit lamps, and the
digit's base is ``lamp_count + 1`` (all off through all on). Row units are
locked together by a recurrence: one lamp in a row is worth one more than
a full row below it, i.e. ``unit[k-1] = (lamp_count[k] + 1) * unit[k]``.
Encoding a time is therefore plain greedy division by place values, and
decoding is the weighted digit sum.

Schemes whose cycle is 720 minutes cover a 12-hour face and carry an
AM/PM meridiem flag on their display states; 1440-minute schemes cover
the full day on the lamps alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from math import prod

from .errors import InvalidSchemeError, InvalidStateError

MINUTES_PER_DAY = 1440
HALF_DAY = 720


class Meridiem(Enum):
    AM = "AM"
    PM = "PM"


@dataclass(frozen=True)
class RowSpec:
    """One row of lamps: how many there are and what each is worth.

    ``unit_value`` is expressed in the scheme's base units, so the bottom
    row of a well-formed scheme always has ``unit_value == 1``.
    """

    lamp_count: int
    unit_value: int

    def __post_init__(self):
        if self.lamp_count < 1:
            raise InvalidSchemeError(f"row needs at least one lamp, got {self.lamp_count}")
        if self.unit_value < 1:
            raise InvalidSchemeError(f"unit value must be positive, got {self.unit_value}")


@dataclass(frozen=True)
class RowScheme:
    """An ordered stack of lamp rows, top row first.

    Construction only checks local well-formedness (non-empty, positive
    fields). Cross-row rules such as the unit recurrence and the capacity
    against ``cycle_minutes`` are checked by :func:`validate`, so that
    broken schemes can be represented and reported on rather than being
    unconstructable.
    """

    name: str
    rows: tuple[RowSpec, ...]
    cycle_minutes: int
    base_unit_minutes: int = 1

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if not self.rows:
            raise InvalidSchemeError("scheme needs at least one row")
        if self.cycle_minutes < 1:
            raise InvalidSchemeError("cycle_minutes must be positive")
        if self.base_unit_minutes < 1:
            raise InvalidSchemeError("base_unit_minutes must be positive")

    @property
    def lamp_counts(self) -> tuple[int, ...]:
        return tuple(row.lamp_count for row in self.rows)

    @property
    def has_meridiem(self) -> bool:
        """True when states of this scheme carry an AM/PM flag."""
        return self.cycle_minutes == HALF_DAY


@dataclass(frozen=True)
class TimeOfDay:
    """A wall-clock time at one-minute resolution."""

    minutes_since_midnight: int

    def __post_init__(self):
        m = self.minutes_since_midnight
        if not 0 <= m < MINUTES_PER_DAY:
            raise ValueError(f"minutes_since_midnight out of range [0, 1440): {m}")

    @classmethod
    def from_hm(cls, hour: int, minute: int) -> "TimeOfDay":
        if not 0 <= hour < 24:
            raise ValueError(f"hour out of range [0, 24): {hour}")
        if not 0 <= minute < 60:
            raise ValueError(f"minute out of range [0, 60): {minute}")
        return cls(hour * 60 + minute)

    @classmethod
    def parse(cls, text: str) -> "TimeOfDay":
        """Parse ``HH:MM`` or ``HH:MM:SS``; seconds are truncated."""
        parts = text.strip().split(":")
        if len(parts) not in (2, 3) or not all(p.isdigit() and p for p in parts):
            raise ValueError(f"not a valid HH:MM time: {text!r}")
        return cls.from_hm(int(parts[0]), int(parts[1]))

    @classmethod
    def from_datetime(cls, dt: datetime) -> "TimeOfDay":
        return cls(dt.hour * 60 + dt.minute)

    @property
    def hour(self) -> int:
        return self.minutes_since_midnight // 60

    @property
    def minute(self) -> int:
        return self.minutes_since_midnight % 60

    def __str__(self) -> str:
        return f"{self.hour:02d}:{self.minute:02d}"


@dataclass(frozen=True)
class DisplayState:
    """Lit-lamp counts per row, top row first, plus optional meridiem.

    Digits are counts, not bit patterns: a digit of 3 means the three
    leftmost lamps of the row are lit. Gapped lamp patterns therefore
    cannot be represented at all.
    """

    digits: tuple[int, ...]
    meridiem: Meridiem | None = None

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if any(d < 0 for d in self.digits):
            raise ValueError(f"digits must be non-negative: {self.digits}")


def derive_units(lamp_counts: list[int] | tuple[int, ...], base_unit: int = 1) -> list[int]:
    """Compute per-row unit values from lamp counts, top row first.

    The bottom row is worth ``base_unit``; every row above is worth
    ``(lamps_below + 1)`` times the row below it, which makes each row's
    full value exactly one unit short of a single lamp one row up.
    """
    counts = list(lamp_counts)
    if not counts:
        raise InvalidSchemeError("lamp_counts must not be empty")
    if any(c < 1 for c in counts):
        raise InvalidSchemeError(f"every row needs at least one lamp: {counts}")
    if base_unit < 1:
        raise InvalidSchemeError(f"base_unit must be positive, got {base_unit}")

    units = [base_unit]
    for lamps in reversed(counts[1:]):
        units.append((lamps + 1) * units[-1])
    units.reverse()
    return units


def capacity(scheme: RowScheme) -> int:
    """Number of distinct states the scheme can display."""
    return prod(row.lamp_count + 1 for row in scheme.rows)


def encode(time: TimeOfDay, scheme: RowScheme) -> DisplayState:
    """Encode a time as lit-lamp counts by greedy division.

    For a 720-minute scheme the value shown is ``minutes mod 720`` and the
    state carries an AM/PM flag; a 1440-minute scheme shows the full day
    value with no flag. Any remainder finer than the base unit is
    truncated, so the display shows the latest representable time not
    after ``time``.
    """
    minutes = time.minutes_since_midnight
    meridiem: Meridiem | None = None
    if scheme.has_meridiem:
        meridiem = Meridiem.AM if minutes < HALF_DAY else Meridiem.PM
        minutes %= HALF_DAY
    elif minutes >= scheme.cycle_minutes:
        raise ValueError(
            f"time {time} is outside the {scheme.cycle_minutes}-minute cycle of scheme {scheme.name!r}"
        )

    remainder = minutes // scheme.base_unit_minutes
    digits = []
    for row in scheme.rows:
        digit, remainder = divmod(remainder, row.unit_value)
        digits.append(digit)
    return DisplayState(tuple(digits), meridiem)


def decode_minutes(state: DisplayState, scheme: RowScheme) -> int:
    """Weighted digit sum in minutes, including any PM offset.

    Unlike :func:`decode` this does not require the value to be a real
    time of day, so surplus states of an over-capacity scheme (the Berlin
    layout can show up to 1499) still decode to their numeric value.
    """
    _check_state(state, scheme)
    total = sum(
        digit * row.unit_value * scheme.base_unit_minutes
        for digit, row in zip(state.digits, scheme.rows)
    )
    if state.meridiem is Meridiem.PM:
        total += HALF_DAY
    return total


def decode(state: DisplayState, scheme: RowScheme) -> TimeOfDay:
    """Sum the lit lamps back into a time of day."""
    total = decode_minutes(state, scheme)
    if total >= MINUTES_PER_DAY:
        raise InvalidStateError(
            f"state decodes to {total} minutes, past the end of the day"
        )
    return TimeOfDay(total)


def _check_state(state: DisplayState, scheme: RowScheme) -> None:
    if len(state.digits) != len(scheme.rows):
        raise InvalidStateError(
            f"state has {len(state.digits)} digits, scheme {scheme.name!r} has {len(scheme.rows)} rows"
        )
    for i, (digit, row) in enumerate(zip(state.digits, scheme.rows)):
        if digit > row.lamp_count:
            raise InvalidStateError(
                f"row {i + 1} shows {digit} lit lamps but only has {row.lamp_count}"
            )
    if scheme.has_meridiem and state.meridiem is None:
        raise InvalidStateError(f"scheme {scheme.name!r} requires an AM/PM flag")
    if not scheme.has_meridiem and state.meridiem is not None:
        raise InvalidStateError(f"scheme {scheme.name!r} does not use an AM/PM flag")


@dataclass(frozen=True)
class Violation:
    """One broken scheme rule. ``row`` is 1-based where applicable."""

    kind: str  # "recurrence" | "bottom-unit" | "capacity"
    row: int | None
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(v.message for v in self.violations)


def validate(scheme: RowScheme) -> ValidationReport:
    """Check the cross-row rules of a scheme and report every breach.

    Violations are data, not exceptions: callers that need a hard failure
    (catalog loading, scheme construction helpers) raise on a non-ok
    report themselves.
    """
    violations = []
    rows = scheme.rows

    for k in range(1, len(rows)):
        expected = (rows[k].lamp_count + 1) * rows[k].unit_value
        if rows[k - 1].unit_value != expected:
            violations.append(
                Violation(
                    kind="recurrence",
                    row=k,
                    message=(
                        f"recurrence violation at pair ({k - 1},{k}): row {k} unit is "
                        f"{rows[k - 1].unit_value}, expected ({rows[k].lamp_count}+1) x "
                        f"{rows[k].unit_value} = {expected}"
                    ),
                )
            )

    if rows[-1].unit_value != 1:
        violations.append(
            Violation(
                kind="bottom-unit",
                row=len(rows),
                message=f"bottom row unit must be 1 base unit, got {rows[-1].unit_value}",
            )
        )

    cap_minutes = capacity(scheme) * scheme.base_unit_minutes
    if cap_minutes < scheme.cycle_minutes:
        violations.append(
            Violation(
                kind="capacity",
                row=None,
                message=(
                    f"capacity shortfall: scheme covers {cap_minutes} minutes "
                    f"but the cycle is {scheme.cycle_minutes}"
                ),
            )
        )

    return ValidationReport(tuple(violations))
