"""
Parsing and formatting of user-facing labels: radix profiles and label vectors.
"""
from typing import Sequence


def parse_profile(text: str) -> list[tuple[int, int]]:
    """
    Parses the `p^m[,p^m...]` syntax.

    Args:
        text: e.g. "2^2,3^2"

    Returns:
        List of (p, m) pairs in the given order

    Raises:
        ValueError: malformed entry
    """
    pairs = []
    for chunk in (text or "").split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        base, sep, exp = chunk.partition("^")
        if not sep:
            raise ValueError(f"profile entry '{chunk}' must look like p^m")
        try:
            pairs.append((int(base), int(exp)))
        except ValueError:
            raise ValueError(f"profile entry '{chunk}' must use integers") from None
    if not pairs:
        raise ValueError("profile must contain at least one p^m entry")
    return pairs


def format_profile(factors: Sequence[Sequence[int]]) -> str:
    """Inverse of parse_profile."""
    return ",".join(f"{p}^{m}" for p, m in factors)


def parse_int_list(text: str) -> list[int]:
    """Comma-separated integers; empty text gives []."""
    return [int(x) for x in (text or "").split(",") if x.strip()]


def parse_int_rows(text: str) -> list[list[int]]:
    """One row per factor, rows separated by ';': "1,2;1" -> [[1, 2], [1]]."""
    return [parse_int_list(row) for row in (text or "").split(";")]
