"""Scan single-edge hosts for their last nonzero codegree.

For a k-uniform edge on v vertices the codegree sequence is the binomial
expansion of (1 - z^k)^D with D = k * (k-1)^(v-k), so it terminates at
codegree k^2 * (k-1)^(v-k); this driver confirms the cutoff empirically.
"""

import argparse

from hypersachs.classical import threshold_search
from hypersachs.hypergraph import MultiHypergraph


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--max-vertices", type=int, default=5)
    args = ap.parse_args()

    k = args.k
    for v in range(k, args.max_vertices + 1):
        host = MultiHypergraph.build(k, v, [tuple(range(1, k + 1))])
        predicted = k * k * (k - 1) ** (v - k)
        # search a bit past the prediction so an exact hit is certain
        report = threshold_search(host, predicted + k)
        mark = "ok" if report.threshold == predicted else "UNEXPECTED"
        print(f"v={v:<3d} predicted={predicted:<6d} {report.describe()}  [{mark}]")


if __name__ == "__main__":
    main()
