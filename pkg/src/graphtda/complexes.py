"""Simplicial complexes built from graphs, plus homology over the two-element field.

Four constructions are provided: cliques, closed neighborhoods, enclaveless
sets and independent sets. Betti numbers come from boundary-matrix ranks and
serve as the homology oracle for everything downstream.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .graphs import WeightedGraph, _adjacency_masks, complement, edge

Simplex = tuple[str, ...]


def simplex(vertices: Iterable[str]) -> Simplex:
    """Canonical simplex: the sorted tuple of its distinct vertices."""
    vs = tuple(sorted(vertices))
    if not vs:
        raise ValueError("a simplex needs at least one vertex")
    for v in vs:
        if not isinstance(v, str):
            raise TypeError(f"vertex labels must be strings, got {v!r}")
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise ValueError(f"simplex vertices must be distinct, got repeated {a!r}")
    return vs


class SimplicialComplex:
    """Finite abstract simplicial complex.

    Stored as a frozenset of sorted vertex tuples. Construction verifies
    downward closure (every codimension-1 face present, which implies full
    closure). The empty complex is allowed and has dimension -1.
    """

    def __init__(self, simplices: Iterable[Iterable[str]] = ()):
        ss = frozenset(simplex(s) for s in simplices)
        for s in ss:
            if len(s) > 1:
                for f in combinations(s, len(s) - 1):
                    if f not in ss:
                        raise ValueError(f"not closed under faces: {f} missing below {s}")
        self._simplices = ss
        self._facets: tuple[Simplex, ...] | None = None
        self._vertices: tuple[str, ...] | None = None

    @classmethod
    def from_facets(
        cls, facets: Iterable[Iterable[str]], max_dim: int | None = None
    ) -> "SimplicialComplex":
        """Downward closure of the given simplices, optionally capped at max_dim."""
        return cls(_closure(facets, max_dim))

    @property
    def simplices(self) -> frozenset[Simplex]:
        return self._simplices

    @property
    def vertices(self) -> tuple[str, ...]:
        if self._vertices is None:
            self._vertices = tuple(sorted({v for s in self._simplices for v in s}))
        return self._vertices

    @property
    def dim(self) -> int:
        return max((len(s) for s in self._simplices), default=0) - 1

    @property
    def facets(self) -> tuple[Simplex, ...]:
        """Inclusion-maximal simplices, lexicographically sorted."""
        if self._facets is None:
            vs = self.vertices
            out = []
            for s in self._simplices:
                member = set(s)
                if not any(
                    v not in member and tuple(sorted(s + (v,))) in self._simplices
                    for v in vs
                ):
                    out.append(s)
            self._facets = tuple(sorted(out))
        return self._facets

    def simplices_of_dim(self, r: int) -> tuple[Simplex, ...]:
        return tuple(sorted(s for s in self._simplices if len(s) == r + 1))

    def __contains__(self, s) -> bool:
        return tuple(sorted(s)) in self._simplices

    def __len__(self) -> int:
        return len(self._simplices)

    def __iter__(self):
        return iter(sorted(self._simplices, key=lambda s: (len(s), s)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self._simplices)} simplices, dim {self.dim})"


def _closure(facets: Iterable[Iterable[str]], max_dim: int | None = None) -> set[Simplex]:
    out: set[Simplex] = set()
    for f in facets:
        base = simplex(f)
        top = len(base) if max_dim is None else min(len(base), max_dim + 1)
        for k in range(1, top + 1):
            out.update(combinations(base, k))
    return out


def _iter_bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _maximal_cliques(adj: list[int]) -> list[int]:
    """Maximal cliques as vertex bitmasks (Bron-Kerbosch with pivoting)."""
    n = len(adj)
    out: list[int] = []
    if n == 0:
        return out

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot, best = -1, -1
        for u in _iter_bits(p | x):
            score = (p & adj[u]).bit_count()
            if score > best:
                pivot, best = u, score
        for v in _iter_bits(p & ~adj[pivot]):
            b = 1 << v
            expand(r | b, p & adj[v], x & adj[v])
            p ^= b
            x |= b

    expand(0, (1 << n) - 1, 0)
    return out


def _masks_to_facets(masks: Iterable[int], labels: tuple[str, ...]) -> list[Simplex]:
    return [tuple(sorted(labels[i] for i in _iter_bits(m))) for m in masks]


def clique_complex(g: WeightedGraph, max_dim: int | None = None) -> SimplicialComplex:
    """Complex of all cliques of g, optionally capped at max_dim."""
    masks = _maximal_cliques(_adjacency_masks(g))
    return SimplicialComplex.from_facets(_masks_to_facets(masks, g.vertices), max_dim)


def neighborhood_complex(g: WeightedGraph, max_dim: int | None = None) -> SimplicialComplex:
    """Complex of all nonempty subsets of closed neighborhoods of g.

    The neighborhood of v contains v itself, so every vertex appears even
    when isolated. Facets are the inclusion-maximal closed neighborhoods.
    """
    nbhds = sorted({tuple(sorted({v} | set(g.adjacency(v)))) for v in g.vertices})
    nbhds.sort(key=len, reverse=True)
    maximal: list[Simplex] = []
    for cand in nbhds:
        cs = set(cand)
        if not any(cs <= set(m) for m in maximal):
            maximal.append(cand)
    return SimplicialComplex.from_facets(maximal, max_dim)


_ENCLAVELESS_VERTEX_GUARD = 20


def enclaveless_complex(g: WeightedGraph, max_dim: int | None = None) -> SimplicialComplex:
    """Complex of enclaveless vertex sets of g.

    A set Y is enclaveless when every member keeps a neighbor outside Y,
    equivalently when the complement of Y is dominating. Maximal enclaveless
    sets are the complements of minimal dominating sets, found by exhaustive
    subset search; graphs beyond 20 vertices are refused, desk scale only.
    """
    n = len(g.vertices)
    if n > _ENCLAVELESS_VERTEX_GUARD:
        raise ValueError(
            f"enclaveless_complex enumerates all 2^n vertex subsets; "
            f"{n} vertices exceeds the guard of {_ENCLAVELESS_VERTEX_GUARD}"
        )
    if n == 0:
        return SimplicialComplex()
    adj = _adjacency_masks(g)
    closed = [adj[i] | (1 << i) for i in range(n)]
    full = (1 << n) - 1

    def dominated(x: int) -> int:
        cover = 0
        for i in _iter_bits(x):
            cover |= closed[i]
        return cover

    minimal_dominating = []
    for x in range(1, full + 1):
        if dominated(x) != full:
            continue
        if all(dominated(x ^ (1 << i)) != full for i in _iter_bits(x)):
            minimal_dominating.append(x)
    facets = [full ^ x for x in minimal_dominating if full ^ x]
    return SimplicialComplex.from_facets(_masks_to_facets(facets, g.vertices), max_dim)


def independent_complex(g: WeightedGraph, max_dim: int | None = None) -> SimplicialComplex:
    """Complex of independent sets of g: the clique complex of the complement."""
    return clique_complex(complement(g), max_dim)


def _chain_label(s: Simplex) -> str:
    # Escaped join so distinct simplices never collide as barycenter labels.
    return "|".join(v.replace("\\", "\\\\").replace("|", "\\|") for v in s)


def barycentric_subdivision(k: SimplicialComplex) -> SimplicialComplex:
    """Barycentric subdivision: one vertex per simplex, simplices are inclusion chains."""
    sims = sorted(k.simplices, key=lambda s: (len(s), s))
    if not sims:
        return SimplicialComplex()
    sets = [frozenset(s) for s in sims]
    n = len(sims)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if sets[i] < sets[j] or sets[j] < sets[i]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    labels = tuple(_chain_label(s) for s in sims)
    chains = _maximal_cliques(adj)
    return SimplicialComplex.from_facets(_masks_to_facets(chains, labels))


def one_skeleton(k: SimplicialComplex) -> WeightedGraph:
    """Graph of the vertices and 1-simplices of k; weights unassigned."""
    return WeightedGraph(k.vertices, [edge(*s) for s in k.simplices_of_dim(1)])


def _gf2_rank(columns: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            low = col.bit_length() - 1
            if low in pivots:
                col ^= pivots[low]
            else:
                pivots[low] = col
                rank += 1
                break
    return rank


def _boundary_columns(k: SimplicialComplex, r: int) -> list[int]:
    """Columns of the boundary map from r-chains to (r-1)-chains, as bitmasks."""
    if r <= 0:
        return []
    rows = {s: i for i, s in enumerate(k.simplices_of_dim(r - 1))}
    cols = []
    for s in k.simplices_of_dim(r):
        mask = 0
        for f in combinations(s, r):
            mask |= 1 << rows[f]
        cols.append(mask)
    return cols


def betti_numbers(k: SimplicialComplex, max_dim: int) -> tuple[int, ...]:
    """Betti numbers of k over the two-element field, degrees 0..max_dim.

    Computed from boundary ranks: beta_r = #r-simplices - rank d_r - rank d_{r+1}.
    """
    if max_dim < 0:
        raise ValueError("max_dim must be nonnegative")
    ranks = [0] * (max_dim + 2)
    for r in range(1, max_dim + 2):
        ranks[r] = _gf2_rank(_boundary_columns(k, r))
    out = []
    for r in range(max_dim + 1):
        out.append(len(k.simplices_of_dim(r)) - ranks[r] - ranks[r + 1])
    return tuple(out)


def complex_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    """Test whether two complexes are isomorphic (small instances only).

    Identical simplex sets short-circuit to True. Otherwise the facet
    incidence structure of each complex is encoded as a bipartite graph
    (vertex nodes against facet nodes) and the graph-isomorphism oracle is
    searched for a class-preserving bijection.
    """
    from .graphs import isomorphisms

    if a.simplices == b.simplices:
        return True
    counts_a = sorted(len(s) for s in a.simplices)
    counts_b = sorted(len(s) for s in b.simplices)
    if counts_a != counts_b:
        return False

    def incidence(k: SimplicialComplex) -> WeightedGraph:
        vs = [f"v:{v}" for v in k.vertices]
        fs = [f"s:{i}" for i in range(len(k.facets))]
        es = [
            (f"v:{v}", f"s:{i}")
            for i, facet in enumerate(k.facets)
            for v in facet
        ]
        return WeightedGraph(vs + fs, es)

    ga, gb = incidence(a), incidence(b)
    for psi in isomorphisms(ga, gb):
        if all(psi[f"v:{v}"].startswith("v:") for v in a.vertices):
            return True
    return False
