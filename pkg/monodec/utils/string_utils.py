def short_msg(val: str, width: int = 48) -> str:
    """Shorten the message to `width` characters, adding '...' if longer."""
    if not isinstance(val, str):
        raise TypeError(f"Expected str, got {type(val)}")

    if not val:
        return ""
    return val[:width] + ("..." if len(val) > width else "")


def strip_comment(line: str) -> str:
    """Drop a trailing '#' comment that is not inside double quotes."""
    if not isinstance(line, str):
        raise TypeError(f"Expected str, got {type(line)}")

    in_quotes = False
    for idx, char in enumerate(line):
        if char == '"':
            in_quotes = not in_quotes
        elif char == "#" and not in_quotes:
            return line[:idx]
    return line


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on `sep` outside double quotes and brackets; parts are stripped.

    Quotes are kept in the parts so callers can tell quoted text from bare words.
    """
    if not isinstance(text, str):
        raise TypeError(f"Expected str, got {type(text)}")

    parts: list[str] = []
    current: list[str] = []
    in_quotes = False
    depth = 0
    for char in text:
        if char == '"':
            in_quotes = not in_quotes
        elif not in_quotes and char == "[":
            depth += 1
        elif not in_quotes and char == "]":
            depth = max(0, depth - 1)
        if char == sep and not in_quotes and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(char)
    parts.append("".join(current).strip())
    return parts


def unquote(value: str) -> str:
    """Remove one pair of surrounding double quotes, if present."""
    if len(value) >= 2 and value[0] == '"' and value[-1] == '"':
        return value[1:-1]
    return value
