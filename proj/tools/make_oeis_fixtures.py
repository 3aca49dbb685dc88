#!/usr/bin/env python3
"""Regenerate the offline OEIS b-file fixtures under data/oeis/.

The sandbox used to build this project has no route to oeis.org, so the
fixtures are produced from the published sequence definitions with sympy's
Stirling numbers. Replace them with `worpitzky verify --oeis <id> --online`
output (or a direct download) when network access is available.
"""
import math
import pathlib
import sys

from sympy.functions.combinatorial.numbers import stirling

ROWS = 15

SEQUENCES = {
    # T(n,k) = k! * S2(n,k), n >= 1, 1 <= k <= n, read by rows.
    "A019538": lambda n, k: math.factorial(k) * stirling(n, k, kind=2),
    # T(n,k) = (k-1)! * S2(n,k), n >= 1, 1 <= k <= n, read by rows.
    "A028246": lambda n, k: math.factorial(k - 1) * stirling(n, k, kind=2),
}


def main(out_dir: pathlib.Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for seq_id, term in SEQUENCES.items():
        lines = [f"# {seq_id}: rows 1..{ROWS}, regenerated offline from the sequence definition"]
        index = 1
        for n in range(1, ROWS + 1):
            for k in range(1, n + 1):
                lines.append(f"{index} {int(term(n, k))}")
                index += 1
        (out_dir / f"b{seq_id[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    root = pathlib.Path(__file__).resolve().parent.parent
    main(pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else root / "data" / "oeis")
