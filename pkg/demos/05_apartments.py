"""Non-crossing spanning trees, apartments, and dominant vertices.

Run:  python3 demos/05_apartments.py
"""

from __future__ import annotations

from ncpverify.apartments import (
    NCSpanningTree,
    apartment_contains,
    cond_iv_prime,
    dominant_vertex,
    spanning_trees,
)
from ncpverify.chains import Chain
from ncpverify.core import Partition


def main() -> None:
    print("non-crossing spanning tree counts for n = 3..7:")
    print(" ", [len(spanning_trees(n)) for n in range(3, 8)])

    path = NCSpanningTree.from_text(7, "1-2,2-3,3-4,4-5,5-6,6-7")
    print(f"\npath tree {path.text()!r}:")
    for text in ("123", "12,4567", "13"):
        p = Partition.from_text(7, text)
        print(f"  apartment contains {text!r}: {apartment_contains(path, p)}")

    dominated = Chain.from_text(7, "67<45,67")
    report = dominant_vertex(dominated)
    print(f"\n{dominated.text()!r} has dominant vertex {report.dominant.text()!r}")
    print(f"  (checked {report.checked_trees} trees)")

    quoted = Chain.from_text(7, "13<13457")
    report = dominant_vertex(quoted)
    print(f"\n{quoted.text()!r} has dominant vertex: {report.dominant}")
    print(f"  yet it satisfies the weakened condition IV': {cond_iv_prime(quoted)}")


if __name__ == "__main__":
    main()
