"""Command-line interface: show, tick, decode, schemes, validate.

Exit codes: 0 on success, 2 for bad input (times, bit strings, flags,
enumeration targets), 3 for scheme problems (unknown name, unreadable or
invalid scheme file).
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass
from typing import Callable, TextIO

from .catalog import resolve_scheme
from .codec import Meridiem, RowScheme, TimeOfDay, decode, encode, validate
from .errors import ClockError, InvalidSchemeError
from .render import Layout, RenderFormat, RenderSpec, parse_bits, render
from .schemes import ShapeClass, enumerate_shapes, DEFAULT_SHAPE_LIMIT
from .timesource import SystemTimeSource, TimeSource

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SCHEME = 3

HIDE_CURSOR = "\x1b[?25l"
SHOW_CURSOR = "\x1b[?25h"
CLEAR_AND_HOME = "\x1b[2J\x1b[H"


def _silence_stream(stream: TextIO) -> None:
    """Point a broken output stream at /dev/null so the interpreter's
    exit-time flush does not raise again."""
    try:
        fd = stream.fileno()
    except (OSError, ValueError):
        return
    os.dup2(os.open(os.devnull, os.O_WRONLY), fd)


@dataclass
class CliConfig:
    """Resolved command-line options shared by the display commands."""

    scheme_selector: str = "triangular"
    format: RenderFormat = RenderFormat.ANSI
    time_override: str | None = None
    tick_interval_seconds: int = 1
    color_mode: str = "auto"  # auto | always | never
    layout: Layout | None = None  # None picks a layout suited to the scheme

    def __post_init__(self):
        if self.tick_interval_seconds < 1:
            raise ValueError("tick interval must be a positive number of seconds")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        return cls(
            scheme_selector=args.scheme,
            format=RenderFormat(getattr(args, "format", "ansi")),
            time_override=getattr(args, "time", None),
            tick_interval_seconds=getattr(args, "interval", 1),
            color_mode=getattr(args, "color", "auto"),
            layout=Layout(args.layout) if getattr(args, "layout", None) else None,
        )


def _color_enabled(mode: str, out: TextIO) -> bool:
    if mode == "always":
        return True
    if mode == "never":
        return False
    return "NO_COLOR" not in os.environ and bool(getattr(out, "isatty", lambda: False)())


def _render_spec(config: CliConfig, scheme: RowScheme, out: TextIO) -> RenderSpec:
    layout = config.layout
    if layout is None:
        layout = Layout.BERLIN_BLOCKS if scheme.name == "berlin" else Layout.TRIANGLE_CENTERED
    return RenderSpec(
        format=config.format,
        layout=layout,
        use_color=_color_enabled(config.color_mode, out),
    )


def _display_time(config: CliConfig, source: TimeSource) -> TimeOfDay:
    if config.time_override is not None:
        return TimeOfDay.parse(config.time_override)
    now = source.now()
    assert now is not None  # the system clock is never exhausted
    return now


def cmd_show(config: CliConfig, out: TextIO | None = None,
             source: TimeSource | None = None) -> int:
    out = out or sys.stdout
    scheme = resolve_scheme(config.scheme_selector)
    t = _display_time(config, source or SystemTimeSource())
    frame = render(encode(t, scheme), scheme, _render_spec(config, scheme, out))
    print(frame, file=out)
    return EXIT_OK


def run_tick(
    scheme: RowScheme,
    spec: RenderSpec,
    source: TimeSource,
    interval: int,
    out: TextIO,
    sleep: Callable[[float], None] = time.sleep,
    max_polls: int | None = None,
    redraw_in_place: bool = False,
) -> int:
    """Poll the time source and emit one frame per poll.

    The state is re-encoded and re-rendered only when the displayed
    minute changes; unchanged minutes re-emit the cached frame. The loop
    ends when the source is exhausted, ``max_polls`` is reached, or the
    user interrupts; interruption restores the cursor and still counts
    as a clean exit.
    """
    last_minute: int | None = None
    frame = ""
    polls = 0
    try:
        if redraw_in_place:
            out.write(HIDE_CURSOR)
        while max_polls is None or polls < max_polls:
            t = source.now()
            if t is None:
                break
            if t.minutes_since_midnight != last_minute:
                frame = render(encode(t, scheme), scheme, spec)
                last_minute = t.minutes_since_midnight
            if redraw_in_place:
                out.write(CLEAR_AND_HOME)
            out.write(frame + "\n")
            out.flush()
            polls += 1
            if max_polls is None or polls < max_polls:
                sleep(interval)
    except KeyboardInterrupt:
        pass
    except BrokenPipeError:
        _silence_stream(out)
        return EXIT_OK
    finally:
        if redraw_in_place:
            try:
                out.write(SHOW_CURSOR)
                out.flush()
            except (BrokenPipeError, ValueError):
                pass
    return EXIT_OK


class PinnedTimeSource:
    """Endless time source pinned to one instant, for --time with tick."""

    def __init__(self, t: TimeOfDay):
        self._t = t

    def now(self) -> TimeOfDay | None:
        return self._t


def cmd_tick(
    config: CliConfig,
    out: TextIO | None = None,
    source: TimeSource | None = None,
    sleep: Callable[[float], None] = time.sleep,
    max_polls: int | None = None,
) -> int:
    out = out or sys.stdout
    scheme = resolve_scheme(config.scheme_selector)
    if config.time_override is not None:
        source = PinnedTimeSource(TimeOfDay.parse(config.time_override))
    elif source is None:
        source = SystemTimeSource()
    spec = _render_spec(config, scheme, out)
    in_place = spec.format is RenderFormat.ANSI and bool(getattr(out, "isatty", lambda: False)())
    return run_tick(scheme, spec, source, config.tick_interval_seconds, out,
                    sleep=sleep, max_polls=max_polls, redraw_in_place=in_place)


def cmd_decode(config: CliConfig, bits: str, meridiem: Meridiem | None,
               out: TextIO | None = None) -> int:
    out = out or sys.stdout
    scheme = resolve_scheme(config.scheme_selector)
    state = parse_bits(bits, scheme, meridiem)
    print(decode(state, scheme), file=out)
    return EXIT_OK


def cmd_schemes(target: int, shape_filter: ShapeClass | None, limit: int,
                out: TextIO | None = None) -> int:
    out = out or sys.stdout
    for shape in enumerate_shapes(target, shape_filter, limit):
        counts = ",".join(str(c) for c in shape.lamp_counts)
        print(f"[{counts}] {shape.classification.value} {shape.total_lamps}", file=out)
    return EXIT_OK


def cmd_validate(selector: str, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    scheme = resolve_scheme(selector)
    report = validate(scheme)
    if report.ok:
        print(f"{scheme.name}: ok", file=out)
        return EXIT_OK
    print(report, file=out)
    return EXIT_SCHEME


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    scheme_opts = argparse.ArgumentParser(add_help=False)
    scheme_opts.add_argument(
        "--scheme", default="triangular", metavar="NAME|PATH",
        help="built-in scheme name (triangular, berlin) or scheme file path",
    )

    render_opts = argparse.ArgumentParser(add_help=False)
    render_opts.add_argument(
        "--format", choices=[f.value for f in RenderFormat], default="ansi",
        help="output format (default: ansi)",
    )
    render_opts.add_argument(
        "--color", choices=["auto", "always", "never"], default="auto",
        help="terminal coloring; auto honors NO_COLOR and non-tty output",
    )
    render_opts.add_argument(
        "--layout", choices=[l.value for l in Layout], default=None,
        help="lamp layout; defaults to blocks for berlin, triangle otherwise",
    )

    parser = argparse.ArgumentParser(
        prog="lampclock",
        description="Lamp-row clocks (triangular and Berlin-style) as mixed-radix displays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_show = sub.add_parser("show", parents=[scheme_opts, render_opts],
                            help="render one time (current or --time)")
    p_show.add_argument("--time", metavar="HH:MM", help="time to display instead of now")
    p_show.set_defaults(func=lambda a: cmd_show(CliConfig.from_args(a)))

    p_tick = sub.add_parser("tick", parents=[scheme_opts, render_opts],
                            help="live display, re-rendered every interval")
    p_tick.add_argument("--time", metavar="HH:MM", help="pin the display to a fixed time")
    p_tick.add_argument("--interval", type=_positive_int, default=1, metavar="SECONDS",
                        help="seconds between polls (default: 1)")
    p_tick.set_defaults(func=lambda a: cmd_tick(CliConfig.from_args(a)))

    p_decode = sub.add_parser("decode", parents=[scheme_opts],
                              help="turn a bit string like 0/11/100/1110/10000 back into a time")
    p_decode.add_argument("bits", help="rows of 0/1 joined by '/'")
    half = p_decode.add_mutually_exclusive_group()
    half.add_argument("--am", dest="meridiem", action="store_const", const=Meridiem.AM,
                      help="morning half, for 12-hour schemes")
    half.add_argument("--pm", dest="meridiem", action="store_const", const=Meridiem.PM,
                      help="afternoon half, for 12-hour schemes")
    p_decode.set_defaults(func=lambda a: cmd_decode(CliConfig.from_args(a), a.bits, a.meridiem))

    p_schemes = sub.add_parser("schemes", help="enumerate lamp layouts for a state count")
    p_schemes.add_argument("target", type=int, help="number of display states to realize")
    shape_group = p_schemes.add_mutually_exclusive_group()
    shape_group.add_argument("--triangular", dest="shape_filter", action="store_const",
                             const=ShapeClass.TRIANGULAR)
    shape_group.add_argument("--rectangular", dest="shape_filter", action="store_const",
                             const=ShapeClass.RECTANGULAR)
    shape_group.add_argument("--irregular", dest="shape_filter", action="store_const",
                             const=ShapeClass.IRREGULAR)
    p_schemes.add_argument("--limit", type=_positive_int, default=DEFAULT_SHAPE_LIMIT,
                           help=f"enumeration cap (default: {DEFAULT_SHAPE_LIMIT})")
    p_schemes.set_defaults(func=lambda a: cmd_schemes(a.target, a.shape_filter, a.limit))

    p_validate = sub.add_parser("validate", parents=[scheme_opts],
                                help="check a scheme's structural rules")
    p_validate.add_argument("scheme_file", nargs="?", default=None,
                            help="scheme file to check (overrides --scheme)")
    p_validate.set_defaults(func=lambda a: cmd_validate(a.scheme_file or a.scheme))

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvalidSchemeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEME
    except (ValueError, ClockError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        _silence_stream(sys.stdout)
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
