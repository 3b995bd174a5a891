"""Bottleneck distance between diagrams and the graph-isomorphism pseudodistance.

The bottleneck optimum is exact: every candidate cost is collected (pairwise
point costs and half-persistences of diagonal moves), then the smallest
candidate admitting a perfect matching in the threshold bipartite graph is
found by binary search. Essential points match only among themselves at cost
|birth - birth'|; when the essential counts differ the distance is +inf,
since a cornerline cannot be moved to the diagonal at finite cost.
"""

from __future__ import annotations

import math
from typing import Sequence

from .graphs import WeightedGraph, isomorphisms
from .persistence import PersistenceDiagram

INF = float("inf")

Point = tuple[float, float]


def _coord_diff(a: float, b: float) -> float:
    if a == b:
        return 0.0
    if math.isinf(a) or math.isinf(b):
        return INF
    return abs(a - b)


def _half_persistence(p: Point) -> float:
    u, v = p
    if math.isinf(u) or math.isinf(v):
        return INF
    return (v - u) / 2.0


def dhat(p: Point, q: Point) -> float:
    """Cost of moving cornerpoint p onto q, diagonal shortcuts included.

    The minimum of the sup-norm displacement and of retiring both points to
    the diagonal. Matching infinite coordinates cost nothing; mismatched ones
    cost +inf.
    """
    direct = max(_coord_diff(p[0], q[0]), _coord_diff(p[1], q[1]))
    via_diagonal = max(_half_persistence(p), _half_persistence(q))
    return min(direct, via_diagonal)


def _expand_points(d: PersistenceDiagram) -> list[Point]:
    out: list[Point] = []
    for p in d.points:
        out.extend([(p.birth, p.death)] * p.multiplicity)
    return out


def _expand_essential(d: PersistenceDiagram) -> list[float]:
    out: list[float] = []
    for e in d.essential:
        out.extend([e.birth] * e.multiplicity)
    return out


def _perfect_matching(adjacency: Sequence[Sequence[int]], right_size: int) -> bool:
    """Kuhn's augmenting-path test for a perfect matching, left side into right."""
    match_right = [-1] * right_size

    def try_augment(u: int, seen: list[bool]) -> bool:
        for v in adjacency[u]:
            if seen[v]:
                continue
            seen[v] = True
            if match_right[v] == -1 or try_augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in range(len(adjacency)):
        if not try_augment(u, [False] * right_size):
            return False
    return True


def _proper_bottleneck(pts1: list[Point], pts2: list[Point]) -> float:
    n1, n2 = len(pts1), len(pts2)
    if n1 == 0 and n2 == 0:
        return 0.0
    pair_cost = [[dhat(p, q) for q in pts2] for p in pts1]
    diag1 = [_half_persistence(p) for p in pts1]
    diag2 = [_half_persistence(q) for q in pts2]

    def feasible(c: float) -> bool:
        # Left: pts1 then projections of pts2. Right: pts2 then projections of
        # pts1. A point reaches only its own projection; projections pair with
        # each other freely at zero cost.
        size = n1 + n2
        adjacency: list[list[int]] = []
        for i in range(n1):
            row = [j for j in range(n2) if pair_cost[i][j] <= c]
            if diag1[i] <= c:
                row.append(n2 + i)
            adjacency.append(row)
        projection_slots = list(range(n2, size))
        for j in range(n2):
            row = list(projection_slots)
            if diag2[j] <= c:
                row.append(j)
            adjacency.append(row)
        return _perfect_matching(adjacency, size)

    candidates = {0.0}
    candidates.update(c for row in pair_cost for c in row if math.isfinite(c))
    candidates.update(c for c in diag1 if math.isfinite(c))
    candidates.update(c for c in diag2 if math.isfinite(c))
    ordered = sorted(candidates)
    if not feasible(ordered[-1]):
        return INF
    lo, hi = 0, len(ordered) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(ordered[mid]):
            hi = mid
        else:
            lo = mid + 1
    return ordered[lo]


def bottleneck(d1: PersistenceDiagram, d2: PersistenceDiagram) -> float:
    """Exact bottleneck distance between two diagrams of the same degree."""
    if d1.dimension != d2.dimension:
        raise ValueError(
            f"cannot compare diagrams of degrees {d1.dimension} and {d2.dimension}"
        )
    ess1 = sorted(_expand_essential(d1))
    ess2 = sorted(_expand_essential(d2))
    if len(ess1) != len(ess2):
        return INF
    ess_cost = max((_coord_diff(a, b) for a, b in zip(ess1, ess2)), default=0.0)
    proper_cost = _proper_bottleneck(_expand_points(d1), _expand_points(d2))
    return max(ess_cost, proper_cost)


def pseudodistance_iso(g1: WeightedGraph, g2: WeightedGraph) -> float:
    """Upper bound for the natural pseudodistance via graph isomorphisms.

    Minimum over all isomorphisms of the largest weight discrepancy on
    corresponding edges; +inf when the graphs are not isomorphic. Exhaustive,
    intended for small graphs.
    """
    if not (g1.is_weighted and g2.is_weighted):
        raise ValueError("pseudodistance_iso requires fully weighted graphs")
    best = INF
    for psi in isomorphisms(g1, g2):
        cost = 0.0
        for (u, v), w in g1.weight.items():
            cost = max(cost, _coord_diff(w, g2.weight[_map_edge(psi, u, v)]))
            if cost >= best:
                break
        if cost < best:
            best = cost
            if best == 0.0:
                break
    return best


def _map_edge(psi: dict[str, str], u: str, v: str) -> tuple[str, str]:
    a, b = psi[u], psi[v]
    return (a, b) if a < b else (b, a)
