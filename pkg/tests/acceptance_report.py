"""Collects the one-line verdicts printed by the acceptance suite."""

LINES = []


def report(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" -- {detail}" if detail else "")
    LINES.append(line)
    print(line)
    return ok


def note(number, text):
    line = f"[INFO] criterion {number}: {text}"
    LINES.append(line)
    print(line)
