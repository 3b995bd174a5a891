#!/usr/bin/env python3
"""Print the sphere constructions the library is built around.

Three families hit every sphere dimension: enclaveless complexes of complete
graphs, iterated clique suspensions of a square, and iterated disjoint-edge
suspensions of the independence complex of a square.
"""

from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from graphtda import (  # noqa: E402
    WeightedGraph,
    betti_numbers,
    clique_complex,
    csusp,
    enclaveless_complex,
    independent_complex,
    isusp,
)


def complete(n: int) -> WeightedGraph:
    vs = [f"k{i}" for i in range(n)]
    return WeightedGraph(vs, combinations(vs, 2))


def square() -> WeightedGraph:
    return WeightedGraph(
        "1234", [("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")]
    )


def show(label: str, betti) -> None:
    print(f"{label:<40} betti {tuple(betti)}")


def main() -> int:
    print("enclaveless complexes of complete graphs")
    for n in range(2, 7):
        show(f"  El(K_{n})", betti_numbers(enclaveless_complex(complete(n)), max(n - 2, 1)))

    print("\nclique complexes under repeated suspension")
    g = square()
    for k in range(4):
        show(f"  Cl(csusp^{k}(square))", betti_numbers(clique_complex(g), k + 2))
        g = csusp(g)

    print("\nindependence complexes under repeated disjoint-edge suspension")
    g = square()
    for k in range(4):
        show(f"  I(isusp^{k}(square))", betti_numbers(independent_complex(g), k + 1))
        g = isusp(g)
    return 0


if __name__ == "__main__":
    sys.exit(main())
