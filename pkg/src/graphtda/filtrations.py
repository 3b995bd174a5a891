"""Filtering functions on the graph complexes, and the ascending/descending pair.

Conventions shared by all three filtrations:

* a 0-simplex gets the minimum weight over its incident edges, with a -inf
  sentinel for isolated vertices (no finite birth time is invented);
* higher simplices get the smallest threshold t at which they qualify in the
  subgraph of edges of weight <= t, evaluated through closed forms that the
  test suite cross-checks against the literal smallest-t definition.

Sentinels order totally: -inf < every finite value < +inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType
from typing import Mapping

from .complexes import (
    Simplex,
    SimplicialComplex,
    clique_complex,
    enclaveless_complex,
    neighborhood_complex,
)
from .graphs import WeightedGraph, _adjacency_masks, _vertex_index, edge
from .parallel import map_ordered

INF = float("inf")
NEG_INF = float("-inf")


class FilteredComplex:
    """A simplicial complex with a monotone simplex-value map.

    The value map must be total and satisfy value(face) <= value(simplex);
    both are enforced at construction, so downstream reductions can trust
    their input. Values are extended reals (finite or the +-inf sentinels).
    """

    def __init__(self, complex: SimplicialComplex, values: Mapping[Simplex, float]):
        vals: dict[Simplex, float] = {}
        for s in complex.simplices:
            if s not in values:
                raise ValueError(f"no value assigned to simplex {s}")
            v = float(values[s])
            if math.isnan(v):
                raise ValueError(f"value for simplex {s} is NaN")
            vals[s] = v
        if len(values) != len(vals):
            extra = set(values) - set(vals)
            raise ValueError(f"values given for simplices outside the complex: {sorted(extra)[:3]}")
        for s in complex.simplices:
            if len(s) > 1:
                for f in combinations(s, len(s) - 1):
                    if vals[f] > vals[s]:
                        raise ValueError(
                            f"not monotone: value({f}) = {vals[f]} > value({s}) = {vals[s]}"
                        )
        self._complex = complex
        self._values = vals
        self._sorted = sorted(vals, key=lambda s: (vals[s], len(s), s))

    @property
    def complex(self) -> SimplicialComplex:
        return self._complex

    @property
    def value(self) -> Mapping[Simplex, float]:
        return MappingProxyType(self._values)

    def sorted_simplices(self) -> list[Simplex]:
        """Simplices in filtration order: by value, then dimension, then label."""
        return list(self._sorted)

    def critical_values(self, finite_only: bool = True) -> tuple[float, ...]:
        vals = set(self._values.values())
        if finite_only:
            vals = {v for v in vals if math.isfinite(v)}
        return tuple(sorted(vals))

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FilteredComplex):
            return NotImplemented
        return self._complex == other._complex and self._values == other._values

    def __repr__(self) -> str:
        return f"FilteredComplex({len(self._values)} simplices)"


def _weight_table(g: WeightedGraph) -> tuple[dict[str, int], list[list[float]]]:
    idx = _vertex_index(g)
    n = len(g.vertices)
    w = [[INF] * n for _ in range(n)]
    for (u, v), x in g.weight.items():
        w[idx[u]][idx[v]] = x
        w[idx[v]][idx[u]] = x
    return idx, w


def _require_weighted(g: WeightedGraph, what: str):
    if not g.is_weighted:
        raise ValueError(f"{what} requires a fully weighted graph")


def _vertex_rule(g: WeightedGraph, v: str) -> float:
    nbrs = g.adjacency(v)
    if not nbrs:
        return NEG_INF
    return min(g.weight[edge(v, u)] for u in nbrs)


def filter_clique(g: WeightedGraph, max_dim: int | None = None) -> FilteredComplex:
    """Clique complex of g filtered by edge weights.

    A k-simplex (k >= 1) enters at the maximum weight over the edges of its
    clique; vertices follow the minimum-incident-weight rule.
    """
    _require_weighted(g, "filter_clique")
    k = clique_complex(g, max_dim)
    idx, w = _weight_table(g)

    def value(s: Simplex) -> float:
        if len(s) == 1:
            return _vertex_rule(g, s[0])
        ids = [idx[v] for v in s]
        return max(w[a][b] for a, b in combinations(ids, 2))

    return _assign(k, value)


def filter_neighborhood(g: WeightedGraph, max_dim: int | None = None) -> FilteredComplex:
    """Neighborhood complex of g filtered by earliest containment.

    For dim >= 1 the value is the smallest t at which the simplex fits inside
    a closed neighborhood of the threshold subgraph at t. Closed form: minimize
    over witnesses w adjacent to every other member (w may belong to the
    simplex) the largest weight among the edges from w.
    """
    _require_weighted(g, "filter_neighborhood")
    k = neighborhood_complex(g, max_dim)
    idx, w = _weight_table(g)
    adj = _adjacency_masks(g)
    n = len(g.vertices)

    def value(s: Simplex) -> float:
        if len(s) == 1:
            return _vertex_rule(g, s[0])
        smask = 0
        for v in s:
            smask |= 1 << idx[v]
        best = INF
        for cand in range(n):
            others = smask & ~(1 << cand)
            if others & ~adj[cand]:
                continue
            t = max(w[cand][u] for u in _bits(others))
            if t < best:
                best = t
        return best

    return _assign(k, value)


def filter_enclaveless(g: WeightedGraph, max_dim: int | None = None) -> FilteredComplex:
    """Enclaveless complex of g filtered by earliest enclavelessness.

    Since subsets of enclaveless sets are enclaveless, a simplex qualifies at
    the smallest t at which each member keeps a threshold-subgraph neighbor
    outside it: the max over members of the min outgoing edge weight.
    """
    _require_weighted(g, "filter_enclaveless")
    k = enclaveless_complex(g, max_dim)
    idx, w = _weight_table(g)
    adj = _adjacency_masks(g)

    def value(s: Simplex) -> float:
        if len(s) == 1:
            return _vertex_rule(g, s[0])
        smask = 0
        for v in s:
            smask |= 1 << idx[v]
        worst = NEG_INF
        for v in s:
            i = idx[v]
            outside = adj[i] & ~smask
            t = min(w[i][u] for u in _bits(outside))
            if t > worst:
                worst = t
        return worst

    return _assign(k, value)


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _assign(k: SimplicialComplex, value) -> FilteredComplex:
    order = sorted(k.simplices, key=lambda s: (len(s), s))
    vals = map_ordered(value, order)
    return FilteredComplex(k, dict(zip(order, vals)))


def extend_weights(g: WeightedGraph) -> WeightedGraph:
    """Complete graph on the vertices of g; missing edges weigh +inf."""
    _require_weighted(g, "extend_weights")
    vs = g.vertices
    weights: dict[tuple[str, str], float] = {}
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            e = edge(vs[i], vs[j])
            weights[e] = g.weight.get(e, INF)
    return WeightedGraph(vs, weights.keys(), weights)


@dataclass(frozen=True)
class ExtendedPair:
    """Ascending clique filtration of g, and descending clique filtration of
    the completed graph under negated extended weights."""

    ascending: FilteredComplex
    descending: FilteredComplex


def extended_pair(g: WeightedGraph, max_dim: int | None = None) -> ExtendedPair:
    """Build the two filtrations backing the extended persistence functions.

    The descending side filters the full simplex on the vertex set: edges of g
    enter at the negation of their weight, non-edges carry the -inf sentinel
    and are present from the start of the pass.
    """
    _require_weighted(g, "extended_pair")
    ascending = filter_clique(g, max_dim)
    gbar = extend_weights(g)
    negated = WeightedGraph(
        gbar.vertices, gbar.edges, {e: -w for e, w in gbar.weight.items()}
    )
    descending = filter_clique(negated, max_dim)
    return ExtendedPair(ascending, descending)
