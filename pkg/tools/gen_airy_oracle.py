"""Freeze the Maclaurin-series Airy oracle on the 0.01 grid over [-10, 10].

Run from the repository root:  python3 tools/gen_airy_oracle.py
Writes tests/data/airy_oracle.json (values as 25-digit strings).
"""

import json
import os
import sys

import mpmath

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))
from oracles import airy_maclaurin  # noqa: E402


def main():
    rows = []
    for i in range(-1000, 1001):
        x = i / 100
        vals = airy_maclaurin(mpmath.mpf(x))  # the exact binary grid point
        rows.append([format(x, ".2f")] + [mpmath.nstr(v, 25, min_fixed=1, max_fixed=0) for v in vals])
    out = os.path.join(os.path.dirname(__file__), "..", "tests", "data", "airy_oracle.json")
    with open(out, "w", encoding="utf-8") as fh:
        json.dump({"columns": ["x", "ai", "bi", "ai_prime", "bi_prime"], "rows": rows}, fh, indent=0)
        fh.write("\n")


if __name__ == "__main__":
    main()
