"""Time sources for the live display, injectable for tests."""

from __future__ import annotations

from datetime import datetime
from typing import Iterable, Protocol

from .codec import TimeOfDay


class TimeSource(Protocol):
    """Anything the tick loop can poll for the current time.

    ``now()`` returns None when the source is exhausted, which ends the
    loop; the real clock never is.
    """

    def now(self) -> TimeOfDay | None: ...


class SystemTimeSource:
    """Local wall-clock time, truncated to the minute."""

    def now(self) -> TimeOfDay | None:
        return TimeOfDay.from_datetime(datetime.now())


class ScriptedTimeSource:
    """Replays a fixed sequence of times, then reports exhaustion."""

    def __init__(self, times: Iterable[TimeOfDay | str]):
        self._times = [
            t if isinstance(t, TimeOfDay) else TimeOfDay.parse(t) for t in times
        ]
        self._index = 0

    def now(self) -> TimeOfDay | None:
        if self._index >= len(self._times):
            return None
        t = self._times[self._index]
        self._index += 1
        return t
