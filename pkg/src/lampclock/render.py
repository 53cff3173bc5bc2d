"""Serialization of display states: terminal art, SVG, bit strings, JSON.

All formats honor monotone left-fill: a row's lit lamps are always its
leftmost ones, so the canonical bit string of a row is '1' * digit
followed by '0' * rest, and no renderer can emit a lit lamp to the right
of an unlit one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .codec import DisplayState, Meridiem, RowScheme, _check_state, decode
from .errors import BitsParseError, InvalidStateError, MonotoneFillError, RenderError


class RenderFormat(Enum):
    ANSI = "ansi"
    SVG = "svg"
    BITS = "bits"
    JSON = "json"


class Layout(Enum):
    TRIANGLE_CENTERED = "triangle"
    LEFT_ALIGNED = "left"
    BERLIN_BLOCKS = "berlin"


ANSI_COLOR_CODES = {
    "black": 30,
    "red": 31,
    "green": 32,
    "yellow": 33,
    "blue": 34,
    "magenta": 35,
    "cyan": 36,
    "white": 37,
}

# Styling for schemes without a meridiem flag (24h Berlin-style faces):
# lit lamps render yellow, with every third lamp of an 11-lamp row
# accented red, echoing the quarter-hour marks of the Berlin clock.
DEFAULT_LIT_COLOR = "yellow"
ACCENT_COLOR = "red"
UNLIT_SVG_FILL = "#dddddd"
SVG_PITCH = 40


@dataclass(frozen=True)
class RenderSpec:
    """Output format plus styling knobs for a render."""

    format: RenderFormat = RenderFormat.ANSI
    lit_glyph: str = "●"
    unlit_glyph: str = "○"
    am_color: str = "green"
    pm_color: str = "red"
    layout: Layout = Layout.TRIANGLE_CENTERED
    use_color: bool = True

    def __post_init__(self):
        for glyph in (self.lit_glyph, self.unlit_glyph):
            if len(glyph) != 1 or not glyph.isprintable() or glyph.isspace():
                raise ValueError(f"glyph must be a single visible character: {glyph!r}")


def render(state: DisplayState, scheme: RowScheme, spec: RenderSpec) -> str:
    """Serialize a state in the format chosen by ``spec``."""
    _check_state(state, scheme)
    if spec.format is RenderFormat.BITS:
        return _render_bits(state, scheme)
    if spec.format is RenderFormat.JSON:
        return _render_json(state, scheme)
    if spec.format is RenderFormat.ANSI:
        return _render_ansi(state, scheme, spec)
    return _render_svg(state, scheme, spec)


def _row_bits(state: DisplayState, scheme: RowScheme) -> list[str]:
    return [
        "1" * digit + "0" * (row.lamp_count - digit)
        for digit, row in zip(state.digits, scheme.rows)
    ]


def _render_bits(state: DisplayState, scheme: RowScheme) -> str:
    return "/".join(_row_bits(state, scheme))


def _render_json(state: DisplayState, scheme: RowScheme) -> str:
    return json.dumps(
        {
            "scheme": scheme.name,
            "digits": list(state.digits),
            "meridiem": state.meridiem.value if state.meridiem else None,
            "time": str(decode(state, scheme)),
        }
    )


def _lit_color(state: DisplayState, scheme: RowScheme, spec: RenderSpec, row: int, lamp: int) -> str:
    if state.meridiem is Meridiem.AM:
        return spec.am_color
    if state.meridiem is Meridiem.PM:
        return spec.pm_color
    if scheme.rows[row].lamp_count == 11 and (lamp + 1) % 3 == 0:
        return ACCENT_COLOR
    return DEFAULT_LIT_COLOR


def _ansi_paint(glyph: str, color: str) -> str:
    try:
        code = ANSI_COLOR_CODES[color]
    except KeyError:
        raise RenderError(
            f"unknown terminal color {color!r} (choose from {', '.join(ANSI_COLOR_CODES)})"
        ) from None
    return f"\x1b[{code}m{glyph}\x1b[0m"


def _render_ansi(state: DisplayState, scheme: RowScheme, spec: RenderSpec) -> str:
    if spec.layout is Layout.BERLIN_BLOCKS and len(scheme.rows) != 4:
        raise RenderError(
            f"berlin block layout needs a 4-row scheme, {scheme.name!r} has {len(scheme.rows)}"
        )

    lines = []
    for k, row in enumerate(scheme.rows):
        cells = []
        for i in range(row.lamp_count):
            lit = i < state.digits[k]
            glyph = spec.lit_glyph if lit else spec.unlit_glyph
            if lit and spec.use_color:
                glyph = _ansi_paint(glyph, _lit_color(state, scheme, spec, k, i))
            cells.append(f"[{glyph}]" if spec.layout is Layout.BERLIN_BLOCKS else glyph)
        joiner = "" if spec.layout is Layout.BERLIN_BLOCKS else " "
        lines.append((joiner.join(cells), row.lamp_count))

    if spec.layout is Layout.LEFT_ALIGNED:
        return "\n".join(text for text, _ in lines)

    # Center each row over the widest row (the bottom row of a triangle).
    # Padding is computed from lamp counts, not rendered text, so that
    # invisible ANSI escape bytes do not skew the alignment.
    cell_width = 3 if spec.layout is Layout.BERLIN_BLOCKS else 2
    max_lamps = max(row.lamp_count for row in scheme.rows)
    padded = []
    for text, lamps in lines:
        pad = (max_lamps - lamps) * cell_width // 2
        padded.append(" " * pad + text)
    return "\n".join(padded)


def _render_svg(state: DisplayState, scheme: RowScheme, spec: RenderSpec) -> str:
    if spec.layout is Layout.BERLIN_BLOCKS and len(scheme.rows) != 4:
        raise RenderError(
            f"berlin block layout needs a 4-row scheme, {scheme.name!r} has {len(scheme.rows)}"
        )

    pitch = SVG_PITCH
    max_lamps = max(row.lamp_count for row in scheme.rows)
    width = max_lamps * pitch
    height = len(scheme.rows) * pitch

    shapes = []
    for k, row in enumerate(scheme.rows):
        y = k * pitch
        for i in range(row.lamp_count):
            lit = i < state.digits[k]
            fill = _lit_color(state, scheme, spec, k, i) if lit else UNLIT_SVG_FILL
            if spec.layout is Layout.BERLIN_BLOCKS:
                cell = width / row.lamp_count
                shapes.append(
                    f'<rect x="{i * cell + 2:g}" y="{y + 2}" '
                    f'width="{cell - 4:g}" height="{pitch - 4}" fill="{fill}"/>'
                )
            else:
                if spec.layout is Layout.TRIANGLE_CENTERED:
                    x_origin = (max_lamps - row.lamp_count) * pitch / 2
                else:
                    x_origin = 0.0
                cx = x_origin + i * pitch + pitch / 2
                shapes.append(
                    f'<circle cx="{cx:g}" cy="{y + pitch / 2:g}" r="{pitch * 2 // 5}" fill="{fill}"/>'
                )

    body = "\n".join(f"  {s}" for s in shapes)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n{body}\n</svg>\n'
    )


def parse_bits(text: str, scheme: RowScheme, meridiem: Meridiem | None = None) -> DisplayState:
    """Parse a '/'-separated bit string back into a display state.

    Bit strings carry no meridiem, so for a 12-hour scheme the flag must
    be supplied by the caller. Rows must match the scheme's widths exactly
    and be monotonically left-filled.
    """
    rows = text.split("/")
    if len(rows) != len(scheme.rows):
        raise BitsParseError(
            f"expected {len(scheme.rows)} rows separated by '/', got {len(rows)}"
        )

    digits = []
    for k, (bits, row) in enumerate(zip(rows, scheme.rows), start=1):
        if len(bits) != row.lamp_count:
            raise BitsParseError(
                f"row {k} must have {row.lamp_count} bits, got {len(bits)}"
            )
        if set(bits) - {"0", "1"}:
            raise BitsParseError(f"row {k} contains characters other than 0/1: {bits!r}")
        ones = bits.count("1")
        if bits != "1" * ones + "0" * (row.lamp_count - ones):
            raise MonotoneFillError(
                k, f"row {k} is not left-filled: {bits!r} has a lit lamp right of an unlit one"
            )
        digits.append(ones)

    if scheme.has_meridiem and meridiem is None:
        raise InvalidStateError(
            f"scheme {scheme.name!r} is a 12-hour face; an AM/PM flag is required to decode"
        )
    if not scheme.has_meridiem and meridiem is not None:
        raise InvalidStateError(f"scheme {scheme.name!r} does not use an AM/PM flag")
    return DisplayState(tuple(digits), meridiem)
