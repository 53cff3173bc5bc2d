import io
import json

import pytest

from lampclock import Meridiem, ScriptedTimeSource, TimeOfDay
from lampclock.cli import (
    EXIT_INPUT,
    EXIT_OK,
    EXIT_SCHEME,
    CliConfig,
    RenderFormat,
    cmd_decode,
    cmd_show,
    cmd_tick,
    main,
)


class TtyBuffer(io.StringIO):
    def isatty(self):
        return True


def bits_config(scheme="triangular", time=None):
    return CliConfig(scheme_selector=scheme, format=RenderFormat.BITS, time_override=time)


class TestShow:
    def test_bits(self, capsys):
        assert main(["show", "--time", "04:49", "--scheme", "triangular", "--format", "bits"]) == EXIT_OK
        assert capsys.readouterr().out == "0/11/100/1110/10000\n"

    def test_json_berlin(self, capsys):
        assert main(["show", "--time", "10:31", "--scheme", "berlin", "--format", "json"]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc["digits"] == [2, 0, 6, 1]
        assert doc["scheme"] == "berlin"

    def test_svg(self, capsys):
        assert main(["show", "--time", "10:31", "--scheme", "berlin", "--format", "svg"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("<?xml")
        assert out.count("<rect") == 23  # berlin defaults to the block layout

    def test_defaults_to_now(self, capsys):
        assert main(["show", "--format", "bits"]) == EXIT_OK
        rows = capsys.readouterr().out.strip().split("/")
        assert [len(r) for r in rows] == [1, 2, 3, 4, 5]

    @pytest.mark.parametrize("bad", ["24:00", "12:60", "noon"])
    def test_bad_time_is_input_error(self, bad, capsys):
        assert main(["show", "--time", bad]) == EXIT_INPUT
        assert "error" in capsys.readouterr().err

    def test_unknown_scheme_is_scheme_error(self, capsys):
        assert main(["show", "--scheme", "sundial"]) == EXIT_SCHEME
        assert "sundial" in capsys.readouterr().err

    def test_invalid_scheme_file_reports_violations(self, tmp_path, capsys):
        path = tmp_path / "tiny.json"
        path.write_text('{"name": "tiny", "cycle_minutes": 720, "rows": [{"lamps": 1}]}')
        assert main(["show", "--scheme", str(path)]) == EXIT_SCHEME
        assert "capacity" in capsys.readouterr().err

    def test_scheme_file_roundtrips(self, tmp_path, capsys):
        path = tmp_path / "mini.json"
        path.write_text(
            '{"name": "mini", "cycle_minutes": 1440, "base_unit_minutes": 60,'
            ' "rows": [{"lamps": 3}, {"lamps": 5}]}'
        )
        assert main(["show", "--scheme", str(path), "--time", "13:00", "--format", "bits"]) == EXIT_OK
        assert capsys.readouterr().out == "110/10000\n"

    def test_color_always_emits_escapes(self, capsys):
        assert main(["show", "--time", "04:49", "--color", "always"]) == EXIT_OK
        assert "\x1b[32m" in capsys.readouterr().out

    def test_no_color_respected_on_tty(self, monkeypatch):
        monkeypatch.setenv("NO_COLOR", "1")
        out = TtyBuffer()
        assert cmd_show(CliConfig(time_override="04:49"), out=out) == EXIT_OK
        assert "\x1b[" not in out.getvalue()

    def test_tty_colors_by_default(self, monkeypatch):
        monkeypatch.delenv("NO_COLOR", raising=False)
        out = TtyBuffer()
        assert cmd_show(CliConfig(time_override="04:49"), out=out) == EXIT_OK
        assert "\x1b[32m" in out.getvalue()


class TestDecode:
    def test_triangular_am(self, capsys):
        assert main(["decode", "0/11/100/1110/10000", "--am"]) == EXIT_OK
        assert capsys.readouterr().out == "04:49\n"

    def test_all_off_am(self, capsys):
        assert main(["decode", "0/00/000/0000/00000", "--am"]) == EXIT_OK
        assert capsys.readouterr().out == "00:00\n"

    def test_pm_offset(self, capsys):
        assert main(["decode", "0/00/000/0000/00000", "--pm"]) == EXIT_OK
        assert capsys.readouterr().out == "12:00\n"

    def test_berlin(self, capsys):
        assert main(["decode", "1100/0000/11111100000/1000", "--scheme", "berlin"]) == EXIT_OK
        assert capsys.readouterr().out == "10:31\n"

    def test_meridiem_required_for_triangular(self, capsys):
        assert main(["decode", "0/00/000/0000/00000"]) == EXIT_INPUT
        assert "AM/PM" in capsys.readouterr().err

    def test_meridiem_rejected_for_berlin(self, capsys):
        assert main(["decode", "0000/0000/00000000000/0000", "--scheme", "berlin", "--am"]) == EXIT_INPUT

    def test_gapped_bits_cite_row(self, capsys):
        assert main(["decode", "0/01/000/0000/00000", "--am"]) == EXIT_INPUT
        assert "row 2" in capsys.readouterr().err

    def test_width_mismatch(self, capsys):
        assert main(["decode", "0/11/100", "--am"]) == EXIT_INPUT


class TestSchemes:
    def test_triangular_720(self, capsys):
        assert main(["schemes", "720", "--triangular"]) == EXIT_OK
        assert capsys.readouterr().out == "[1,2,3,4,5] TRIANGULAR 15\n"

    def test_no_triangle_for_decimal_day(self, capsys):
        assert main(["schemes", "1000", "--triangular"]) == EXIT_OK
        assert capsys.readouterr().out == ""

    def test_six(self, capsys):
        assert main(["schemes", "6"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == [
            "[1,2] TRIANGULAR 3",
            "[2,1] IRREGULAR 3",
            "[5] IRREGULAR 5",
        ]

    def test_target_below_two(self, capsys):
        assert main(["schemes", "1"]) == EXIT_INPUT

    def test_cap_overflow(self, capsys):
        assert main(["schemes", "720", "--limit", "10"]) == EXIT_INPUT
        assert "10" in capsys.readouterr().err


class TestValidate:
    def test_builtin_ok(self, capsys):
        assert main(["validate", "--scheme", "berlin"]) == EXIT_OK
        assert capsys.readouterr().out == "berlin: ok\n"

    def test_positional_file(self, tmp_path, capsys):
        path = tmp_path / "ok.json"
        path.write_text('{"name": "ok", "cycle_minutes": 2, "rows": [{"lamps": 1}]}')
        assert main(["validate", str(path)]) == EXIT_OK

    def test_invalid_file(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"name": "bad", "cycle_minutes": 720, "rows": [{"lamps": 2}]}')
        assert main(["validate", str(path)]) == EXIT_SCHEME
        assert "capacity" in capsys.readouterr().err


class TestTick:
    def test_noon_boundary_ansi(self):
        out = io.StringIO()
        config = CliConfig(color_mode="always")
        source = ScriptedTimeSource(["11:59", "12:00"])
        assert cmd_tick(config, out=out, source=source, sleep=lambda s: None) == EXIT_OK
        frames = out.getvalue().splitlines()
        first, second = "\n".join(frames[:5]), "\n".join(frames[5:])
        assert first.count("\x1b[32m") == 15  # all 15 lamps on, morning color
        assert second.count("○") == 15 and "\x1b[32m" not in second

    def test_noon_boundary_meridiem(self):
        out = io.StringIO()
        config = CliConfig(format=RenderFormat.JSON)
        source = ScriptedTimeSource(["11:59", "12:00"])
        cmd_tick(config, out=out, source=source, sleep=lambda s: None)
        docs = [json.loads(line) for line in out.getvalue().splitlines()]
        assert [d["meridiem"] for d in docs] == ["AM", "PM"]
        assert docs[0]["digits"] == [1, 2, 3, 4, 5]
        assert docs[1]["digits"] == [0, 0, 0, 0, 0]

    def test_midnight_wrap(self):
        out = io.StringIO()
        config = CliConfig(color_mode="always")
        source = ScriptedTimeSource(["23:59", "00:00"])
        cmd_tick(config, out=out, source=source, sleep=lambda s: None)
        frames = out.getvalue().splitlines()
        first, second = "\n".join(frames[:5]), "\n".join(frames[5:])
        assert first.count("\x1b[31m") == 15  # all on, afternoon color
        assert strip_escapes(second).count("○") == 15

    def test_static_clock_emits_identical_frames_without_reencoding(self, monkeypatch):
        import lampclock.cli as cli_module

        expected_frame = render_bits_for("09:15")
        calls = []
        real_encode = cli_module.encode
        monkeypatch.setattr(cli_module, "encode", lambda t, s: calls.append(t) or real_encode(t, s))

        out = io.StringIO()
        config = bits_config(time="09:15")
        config.tick_interval_seconds = 60
        sleeps = []
        assert cmd_tick(config, out=out, sleep=sleeps.append, max_polls=3) == EXIT_OK
        assert out.getvalue().splitlines() == [expected_frame] * 3
        assert len(calls) == 1  # re-encoded only once for an unchanged minute
        assert sleeps == [60, 60]

    def test_frames_match_show_at_same_minute(self):
        for scheme in ("triangular", "berlin"):
            for minute in (0, 289, 631, 719, 720, 1439):
                text = str(TimeOfDay(minute))
                shown = io.StringIO()
                cmd_show(bits_config(scheme, text), out=shown)
                ticked = io.StringIO()
                cmd_tick(bits_config(scheme), out=ticked,
                         source=ScriptedTimeSource([text]), sleep=lambda s: None)
                assert ticked.getvalue() == shown.getvalue()

    def test_interrupt_is_clean_and_restores_cursor(self):
        out = TtyBuffer()

        def interrupting_sleep(seconds):
            raise KeyboardInterrupt

        config = CliConfig()
        source = ScriptedTimeSource(["10:00", "10:01", "10:02"])
        assert cmd_tick(config, out=out, source=source, sleep=interrupting_sleep) == EXIT_OK
        text = out.getvalue()
        assert text.startswith("\x1b[?25l")  # cursor hidden while running
        assert text.endswith("\x1b[?25h")  # and restored on the way out

    def test_interval_must_be_positive(self):
        assert main(["tick", "--interval", "0"]) == EXIT_INPUT


def strip_escapes(text):
    import re

    return re.sub(r"\x1b\[[0-9;]*m", "", text)


def render_bits_for(text, scheme="triangular"):
    out = io.StringIO()
    cmd_show(bits_config(scheme, text), out=out)
    return out.getvalue().strip()


def test_cli_decode_show_identity_every_minute():
    for scheme in ("triangular", "berlin"):
        for minutes in range(1440):
            t = TimeOfDay(minutes)
            shown = io.StringIO()
            assert cmd_show(bits_config(scheme, str(t)), out=shown) == EXIT_OK
            meridiem = None
            if scheme == "triangular":
                meridiem = Meridiem.AM if minutes < 720 else Meridiem.PM
            decoded = io.StringIO()
            assert cmd_decode(bits_config(scheme), shown.getvalue().strip(), meridiem, out=decoded) == EXIT_OK
            assert decoded.getvalue().strip() == str(t)


def test_exit_codes_partition():
    cases = [
        ["show", "--time", "04:49", "--format", "bits"],
        ["show", "--time", "99:00"],
        ["show", "--scheme", "missing"],
        ["decode", "0/01/000/0000/00000", "--am"],
        ["decode", "0/11/100/1110/10000", "--am"],
        ["schemes", "6"],
        ["schemes", "0"],
        ["validate", "--scheme", "triangular"],
        ["not-a-command"],
    ]
    for argv in cases:
        assert main(argv) in {0, 2, 3}
