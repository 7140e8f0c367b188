"""Regenerate src/nanoloop/_airy_nodes.py.

Tabulates Ai, Ai', Bi, Bi' at x = LO, LO + STEP, ..., HI to 30 significant
digits. Needs mpmath (development only; the runtime never imports it).

    python tools/gen_airy_nodes.py > src/nanoloop/_airy_nodes.py
"""

import mpmath as mp

LO, HI, STEP = -16, 16, 0.25
DIGITS = 30


def main():
    mp.mp.dps = DIGITS + 20
    n = int(round((HI - LO) / STEP))
    print('"""Airy node table generated by tools/gen_airy_nodes.py; do not edit."""')
    print()
    print(f"LO = {LO!r}")
    print(f"STEP = {STEP!r}")
    print()
    print("# (Ai, Ai', Bi, Bi') at x = LO + i * STEP")
    print("NODES = (")
    for i in range(n + 1):
        x = mp.mpf(LO) + i * mp.mpf(STEP)
        vals = (mp.airyai(x), mp.airyai(x, 1), mp.airybi(x), mp.airybi(x, 1))
        text = ", ".join(f'"{mp.nstr(v, DIGITS, min_fixed=-1, max_fixed=1)}"' for v in vals)
        print(f"    ({text}),  # {mp.nstr(x, 6)}")
    print(")")


if __name__ == "__main__":
    main()
