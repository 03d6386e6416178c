#!/usr/bin/env python3
"""Regenerate the frozen erfc reference table used by the test suite.

Values come from mpmath at 40 significant digits, printed with 20 digits,
which is far beyond f64 resolution. Run from the repository root:

    python3 tools/gen_erfc_reference.py > crates/core/tests/data/erfc_reference.csv
"""

from mpmath import mp, erfc

mp.dps = 40

POINTS = 1000

print("x,erfc")
for i in range(POINTS):
    x = mp.mpf(10) * i / (POINTS - 1)
    print(f"{mp.nstr(x, 20)},{mp.nstr(erfc(x), 20)}")
