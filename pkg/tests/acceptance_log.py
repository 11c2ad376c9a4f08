"""One verdict line per acceptance criterion, printed again in the terminal summary."""
LINES: dict[int, str] = {}


def record(k: int, ok: bool, text: str) -> str:
    line = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {text}"
    LINES[k] = line
    print(line)
    return line
