"""Built-in schemes and loading of user scheme files.

A scheme file is JSON with the shape::

    {"name": "...", "base_unit_minutes": 1, "cycle_minutes": 720,
     "rows": [{"lamps": 1}, {"lamps": 2}, ...]}

Unit values are always derived from the lamp counts, never read from the
file, so a file cannot describe a scheme that breaks the unit recurrence.
A capacity shortfall against the declared cycle is still possible and is
rejected at load time.
"""

from __future__ import annotations

import json
from pathlib import Path

from .codec import RowScheme, RowSpec, derive_units, validate
from .errors import InvalidSchemeError


def make_scheme(
    name: str,
    lamp_counts: list[int] | tuple[int, ...],
    cycle_minutes: int,
    base_unit_minutes: int = 1,
) -> RowScheme:
    """Build a scheme from lamp counts, deriving units, and validate it."""
    units = derive_units(lamp_counts, base_unit=1)
    rows = tuple(RowSpec(lamps, unit) for lamps, unit in zip(lamp_counts, units))
    scheme = RowScheme(name, rows, cycle_minutes, base_unit_minutes)
    report = validate(scheme)
    if not report.ok:
        raise InvalidSchemeError(f"scheme {name!r} is invalid:\n{report}")
    return scheme


# 12-hour triangular face: rows of 1..5 lamps worth 6h/2h/30min/6min/1min.
TRIANGULAR = make_scheme("triangular", [1, 2, 3, 4, 5], cycle_minutes=720)

# 24-hour Berlin clock: rows of 4/4/11/4 lamps worth 5h/1h/5min/1min.
BERLIN = make_scheme("berlin", [4, 4, 11, 4], cycle_minutes=1440)

BUILTIN_SCHEMES: dict[str, RowScheme] = {
    TRIANGULAR.name: TRIANGULAR,
    BERLIN.name: BERLIN,
}


def load_scheme(path: str | Path) -> RowScheme:
    """Load and validate a scheme definition file."""
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidSchemeError(f"cannot read scheme file {path}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InvalidSchemeError(f"scheme file {path} is not valid JSON: {exc}") from exc

    if not isinstance(data, dict):
        raise InvalidSchemeError(f"scheme file {path} must contain a JSON object")
    try:
        name = data["name"]
        cycle_minutes = data["cycle_minutes"]
        row_entries = data["rows"]
    except KeyError as exc:
        raise InvalidSchemeError(f"scheme file {path} is missing key {exc}") from exc
    base_unit_minutes = data.get("base_unit_minutes", 1)

    if not isinstance(name, str) or not name:
        raise InvalidSchemeError(f"scheme file {path}: 'name' must be a non-empty string")
    if not isinstance(cycle_minutes, int) or not isinstance(base_unit_minutes, int):
        raise InvalidSchemeError(f"scheme file {path}: minute fields must be integers")
    if not isinstance(row_entries, list) or not row_entries:
        raise InvalidSchemeError(f"scheme file {path}: 'rows' must be a non-empty list")

    lamp_counts = []
    for i, entry in enumerate(row_entries):
        if not isinstance(entry, dict) or not isinstance(entry.get("lamps"), int):
            raise InvalidSchemeError(
                f"scheme file {path}: rows[{i}] must be an object with integer 'lamps'"
            )
        lamp_counts.append(entry["lamps"])

    return make_scheme(name, lamp_counts, cycle_minutes, base_unit_minutes)


def resolve_scheme(selector: str) -> RowScheme:
    """Turn a built-in name or a file path into a scheme."""
    if selector in BUILTIN_SCHEMES:
        return BUILTIN_SCHEMES[selector]
    if selector.endswith(".json") or Path(selector).exists():
        return load_scheme(selector)
    known = ", ".join(sorted(BUILTIN_SCHEMES))
    raise InvalidSchemeError(f"unknown scheme {selector!r} (built-ins: {known})")
