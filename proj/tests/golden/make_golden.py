#!/usr/bin/env python3
"""Regenerates the golden export files with arbitrary-precision arithmetic.

Independent of the C++ library: every value is evaluated with mpmath at 50
significant digits and rounded once to six decimals.

    python3 tests/golden/make_golden.py tests/golden
"""
import sys
from pathlib import Path

from mpmath import mp, mpf, log

mp.dps = 50


def log2(t):
    return log(t, 2)


FAMILIES = {
    "equal": lambda x: 2**x,
    "log": lambda x: log2(4 + 12 * x) / 2,
}


def check_unambiguous(v):
    scaled = v * 10**6
    if abs(scaled - mp.floor(scaled) - mpf("0.5")) < mpf("1e-12"):
        raise SystemExit(f"ambiguous rounding for {v}")


def six(v):
    # ties are rejected by check_unambiguous, so nint is correct rounding
    r = mp.nint(v * 10**6)
    sign = "-" if r < 0 else ""
    r = abs(int(r))
    return f"{sign}{r // 10**6}.{r % 10**6:06d}"


def cents(f, n, tones=12):
    return 1200 * log2(f(mpf(n) / tones))


def write(out_dir, name, f, tones=12, base=440):
    scl = [f"Functionally quantized scale: {name}, T={tones}", str(tones)]
    for n in range(1, tones + 1):
        check_unambiguous(cents(f, n))
        scl.append(six(cents(f, n)))
    (out_dir / f"{name}.scl").write_text("\n".join(scl) + "\n")

    csv = ["octave,step,frequency_hz,cents"]
    for n in range(0, tones + 1):
        hz = base * f(mpf(n) / tones)
        check_unambiguous(hz)
        csv.append(f"0,{n},{six(hz)},{six(cents(f, n))}")
    (out_dir / f"{name}_440.csv").write_text("\n".join(csv) + "\n")


if __name__ == "__main__":
    out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
    for name, f in FAMILIES.items():
        write(out, name, f)
