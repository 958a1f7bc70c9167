import re

UNVISITED = -1

_CLOCK = re.compile(r"^(\d{1,2}):([0-5]\d)$")


def parse_clock(text: str) -> int:
    """'HH:MM' -> minutes after midnight."""
    match = _CLOCK.match(text.strip())
    if not match:
        raise ValueError(f"invalid time {text!r}, expected HH:MM")
    return int(match.group(1)) * 60 + int(match.group(2))


def format_clock(minutes: int) -> str:
    if minutes < 0:
        raise ValueError(f"cannot format negative time {minutes}")
    return f"{minutes // 60:02d}:{minutes % 60:02d}"
