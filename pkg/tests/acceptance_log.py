"""Collects one pass/fail line per acceptance criterion for the terminal summary."""

LINES: list[str] = []


def record(number: int, passed: bool, text: str) -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {text}"
    LINES.append(line)
    print(line)
