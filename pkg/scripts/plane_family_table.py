"""Print the codegree coefficient table for the three plane-family hosts.

Columns are the 5-, 6-, and 7-line hosts; rows are codegrees 0..dmax.
Each column is timed separately since cost grows steeply with dmax.
"""

import argparse
import time

from hypersachs.catalog import fano_minus_one, fano_minus_two, fano_plane
from hypersachs.traces import codegree_coefficients


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-codegree", type=int, default=12)
    args = ap.parse_args()

    hosts = [
        ("5-line", fano_minus_two()),
        ("6-line", fano_minus_one()),
        ("7-line", fano_plane()),
    ]
    columns = []
    for label, host in hosts:
        t0 = time.monotonic()
        table = codegree_coefficients(host, args.max_codegree)
        columns.append((label, table, time.monotonic() - t0))

    width = max(len(str(c)) for _, t, _ in columns for c in t.coefficients) + 2
    header = "d".rjust(4) + "".join(lb.rjust(width) for lb, _, _ in columns)
    print(header)
    for d in range(args.max_codegree + 1):
        row = str(d).rjust(4)
        for _, table, _ in columns:
            row += str(table.coefficient(d)).rjust(width)
        print(row)
    for label, _, dt in columns:
        print(f"# {label}: {dt:.2f}s")


if __name__ == "__main__":
    main()
