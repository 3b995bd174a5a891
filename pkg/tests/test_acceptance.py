"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to watch the lines stream.
Sample sizes, vertex bounds and time budgets are fixed here, not tunable.
"""

import random
import time
from contextlib import contextmanager
from itertools import combinations
from pathlib import Path

from graphtda import (
    SimplicialComplex,
    WeightedGraph,
    barycentric_subdivision,
    betti_numbers,
    bottleneck,
    clique_complex,
    complement,
    complex_isomorphic,
    csusp,
    enclaveless_complex,
    extended_pair,
    filter_clique,
    filter_enclaveless,
    filter_neighborhood,
    independent_complex,
    neighborhood_complex,
    one_skeleton,
    parse_graph,
    pseudodistance_iso,
)
from graphtda.filtrations import FilteredComplex
from graphtda.persistence import ExtendedPersistence, reduce
from oracles import SmallestTOracle, SublevelRankOracle, oracle_bottleneck
from randutil import (
    nested_graph_pair,
    random_complex,
    random_diagram,
    random_filtration_values,
    random_weighted_graph,
)

DATA = Path(__file__).parent.parent / "data"
INF = float("inf")


@contextmanager
def criterion(num, name):
    started = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"criterion {num:>2} ({name}): FAIL")
        raise
    elapsed = time.perf_counter() - started
    print(f"criterion {num:>2} ({name}): PASS [{elapsed:.1f}s]")


def complete(n):
    vs = [f"k{i}" for i in range(n)]
    return WeightedGraph(vs, combinations(vs, 2))


def test_criterion_01_enclaveless_spheres():
    with criterion(1, "enclaveless complexes of complete graphs are spheres"):
        started = time.perf_counter()
        for n in range(2, 7):
            expected = (2,) if n == 2 else tuple([1] + [0] * (n - 3) + [1])
            got = betti_numbers(enclaveless_complex(complete(n)), n - 2)
            assert got == expected, (n, got, expected)
        assert time.perf_counter() - started < 10.0


def test_criterion_02_clique_spheres_by_suspension():
    with criterion(2, "iterated suspension of the square triangulates spheres"):
        started = time.perf_counter()
        g = parse_graph("1 2 1\n2 3 1\n3 4 1\n1 4 1")
        for k in range(4):
            sphere_dim = 1 + k
            expected = tuple(1 if r in (0, sphere_dim) else 0 for r in range(6))
            got = betti_numbers(clique_complex(g, max_dim=5), 5)
            assert got == expected, (k, got, expected)
            g = csusp(g)
        assert time.perf_counter() - started < 30.0


def test_criterion_03_representability():
    with criterion(3, "subdivisions are clique- and independence-representable"):
        started = time.perf_counter()
        rng = random.Random(1003)
        for _ in range(20):
            k = random_complex(rng, max_vertices=6, max_facets=5)
            bs = barycentric_subdivision(k)
            skeleton = one_skeleton(bs)
            assert complex_isomorphic(clique_complex(skeleton), bs)
            assert complex_isomorphic(independent_complex(complement(skeleton)), bs)
        assert time.perf_counter() - started < 60.0


def test_criterion_04_filtrations_monotone():
    with criterion(4, "every filtering function is monotone on faces"):
        rng = random.Random(1004)
        violations = 0
        for i in range(200):
            g = random_weighted_graph(
                rng, min_n=2, max_n=12, p=(0.2, 0.85),
                weights="int" if i % 2 else "float",
            )
            for build in (filter_clique, filter_neighborhood, filter_enclaveless):
                fc = build(g)
                for s, v in fc.value.items():
                    if len(s) > 1:
                        for f in combinations(s, len(s) - 1):
                            if fc.value[f] > v:
                                violations += 1
        assert violations == 0


def test_criterion_05_closed_forms_match_definition():
    with criterion(5, "closed-form values equal literal smallest-threshold values"):
        rng = random.Random(1005)
        mismatches = 0
        for i in range(100):
            g = random_weighted_graph(
                rng, min_n=4, max_n=10, p=(0.2, 0.85),
                weights="int" if i % 2 else "float",
            )
            oracle = SmallestTOracle(g)
            for fc, literal in (
                (filter_neighborhood(g), oracle.nb_value),
                (filter_enclaveless(g), oracle.el_value),
            ):
                for s, v in fc.value.items():
                    if len(s) == 1:
                        nbrs = g.adjacency(s[0])
                        rule = (
                            min(g.edge_weight(s[0], u) for u in nbrs)
                            if nbrs
                            else -INF
                        )
                        if v != rule:
                            mismatches += 1
                    elif literal(s) != v:
                        mismatches += 1
        assert mismatches == 0


def _fat_complex(rng):
    """Complexes spread across the whole size budget, up to 200 simplices."""
    vs = [f"v{i}" for i in range(8)]
    while True:
        n = rng.randint(4, 8)
        facets = []
        for _ in range(rng.randint(2, 5)):
            size = rng.randint(max(1, n - 4), n)
            facets.append(rng.sample(vs[:n], size))
        k = SimplicialComplex.from_facets(facets)
        if len(k) <= 200:
            return k


def test_criterion_06_diagram_rank_equivalence():
    with criterion(6, "diagram-based ranks equal explicit sublevel ranks"):
        started = time.perf_counter()
        rng = random.Random(1006)
        mismatches = 0
        total_simplices = 0
        for _ in range(100):
            k = _fat_complex(rng)
            total_simplices += len(k)
            fc = FilteredComplex(k, random_filtration_values(rng, k, levels=6))
            diagrams = reduce(fc, 2)
            oracle = SublevelRankOracle(fc)
            crit = fc.critical_values()
            queries = [(u, v) for u in crit for v in crit if u < v]
            queries += [(crit[0] - 1.0, v) for v in crit]
            queries += [(u, crit[-1] + 1.0) for u in crit]
            for r in range(3):
                for u, v in queries:
                    if diagrams[r].rank(u, v) != oracle.pbn(r, u, v):
                        mismatches += 1
        assert mismatches == 0
        assert total_simplices > 5000  # the samples must exercise the budget
        assert time.perf_counter() - started < 300.0


def test_criterion_07_subcomplex_monotonicity():
    with criterion(7, "nested graphs give nested complexes, reversed for independence"):
        rng = random.Random(1007)
        violations = 0
        for _ in range(100):
            g, h = nested_graph_pair(rng, max_n=10)
            if not clique_complex(g).simplices <= clique_complex(h).simplices:
                violations += 1
            if not neighborhood_complex(g).simplices <= neighborhood_complex(h).simplices:
                violations += 1
            if not enclaveless_complex(g).simplices <= enclaveless_complex(h).simplices:
                violations += 1
            if not independent_complex(h).simplices <= independent_complex(g).simplices:
                violations += 1
        assert violations == 0


def test_criterion_08_stability():
    with criterion(8, "bottleneck distance bounded by the weight perturbation"):
        rng = random.Random(1008)
        slack = 1e-12
        epsilons = (0.01, 0.1, 1.0)
        for i in range(100):
            eps = epsilons[i % 3]
            g = random_weighted_graph(rng, min_n=3, max_n=9, p=(0.3, 0.7))
            h = WeightedGraph(
                g.vertices,
                g.edges,
                {e: w + rng.uniform(-eps, eps) for e, w in g.weight.items()},
            )
            delta = pseudodistance_iso(g, h)
            assert delta <= eps + slack, (i, delta, eps)
            for build in (filter_clique, filter_neighborhood, filter_enclaveless):
                da = reduce(build(g), 1)
                db = reduce(build(h), 1)
                for r in (0, 1):
                    d = bottleneck(da[r], db[r])
                    assert d <= delta + slack, (i, build.__name__, r, d, delta)


def test_criterion_09_extended_persistence_discriminates():
    with criterion(9, "extended functions separate weightings that plain ones cannot"):
        ga = parse_graph((DATA / "extended_a.txt").read_text())
        gb = parse_graph((DATA / "extended_b.txt").read_text())
        assert ga.edges == gb.edges and ga.vertices == gb.vertices
        ea = ExtendedPersistence(extended_pair(ga, 1), 0)
        eb = ExtendedPersistence(extended_pair(gb, 1), 0)

        crit = sorted(set(ga.weight.values()) | set(gb.weight.values()))
        lattice = [crit[0] - 1.0]
        for a, b in zip(crit, crit[1:]):
            lattice += [a, (a + b) / 2]
        lattice += [crit[-1], crit[-1] + 1.0]

        # ascending degree-0 functions agree at every critical query
        assert ea.ascending[0] == eb.ascending[0]
        for u in lattice:
            for v in lattice:
                if u < v:
                    assert ea.pbn(0, u, v) == eb.pbn(0, u, v), (u, v)

        # exhaustive scan of the lower half-plane finds a separating query
        witnesses = [
            (u, v)
            for u in lattice
            for v in lattice
            if u > v and ea.pbn(0, u, v) != eb.pbn(0, u, v)
        ]
        assert witnesses, "no separating query found below the diagonal"
        u, v = witnesses[0]
        print(
            f"    witness query (u, v) = ({u}, {v}): "
            f"{ea.pbn(0, u, v)} vs {eb.pbn(0, u, v)}"
        )


def test_criterion_10_bottleneck_exactness():
    with criterion(10, "threshold-search bottleneck equals exhaustive matching"):
        rng = random.Random(1010)
        mismatches = 0
        for _ in range(200):
            d1 = random_diagram(rng, max_points=6, with_essential=bool(rng.getrandbits(1)))
            d2 = random_diagram(rng, max_points=6, with_essential=bool(rng.getrandbits(1)))
            if d1.total_essential != d2.total_essential:
                d2 = random_diagram(rng, max_points=6, with_essential=False)
                d1 = random_diagram(rng, max_points=6, with_essential=False)
            if bottleneck(d1, d2) != oracle_bottleneck(d1, d2):
                mismatches += 1
        assert mismatches == 0
        for _ in range(30):
            ds = [random_diagram(rng, max_points=5, with_essential=False) for _ in range(3)]
            assert bottleneck(ds[0], ds[0]) == 0.0
            assert bottleneck(ds[0], ds[1]) == bottleneck(ds[1], ds[0])
            assert (
                bottleneck(ds[0], ds[2])
                <= bottleneck(ds[0], ds[1]) + bottleneck(ds[1], ds[2]) + 1e-12
            )


def test_criterion_11_figure_goldens():
    with criterion(11, "committed example reproduces the documented PBN features"):
        g = parse_graph((DATA / "figures_graph.txt").read_text())
        fcl = filter_clique(g, 4)
        fnb = filter_neighborhood(g, 4)
        fel = filter_enclaveless(g, 4)
        dcl = reduce(fcl, 2)
        dnb = reduce(fnb, 2)
        delv = reduce(fel, 2)

        # frozen goldens, cross-checked below against the rank oracle
        assert [(e.birth, e.multiplicity) for e in dcl[0].essential] == [(1.0, 1), (7.0, 1)]
        assert dcl[0].points == ()
        assert [(e.birth, e.multiplicity) for e in dcl[1].essential] == [(10.0, 1)]

        # clique filtration carries a nontrivial degree-1 function
        assert dcl[1].rank(10.0, 11.0) == 1

        # neighborhood filtration: same degree-0 diagram, trivial degree 1
        assert dnb[0] == dcl[0]
        assert dnb[1].points == () and dnb[1].essential == ()

        # enclaveless filtration: nontrivial degree-2 function
        assert [(p.birth, p.death, p.multiplicity) for p in delv[2].points] == [(6.0, 7.0, 1)]
        assert delv[2].rank(6.0, 6.5) == 1

        for fc, diagrams in ((fcl, dcl), (fnb, dnb), (fel, delv)):
            oracle = SublevelRankOracle(fc)
            crit = fc.critical_values()
            for r in range(3):
                for u, v in combinations(crit, 2):
                    assert diagrams[r].rank(u, v) == oracle.pbn(r, u, v), (r, u, v)

        # the letter-M profile: three components at 1, pairwise merges at 2
        m = parse_graph((DATA / "letter_m.txt").read_text())
        dm = reduce(filter_clique(m), 0)[0]
        assert [(p.birth, p.death, p.multiplicity) for p in dm.points] == [(1.0, 2.0, 2)]
        assert [(e.birth, e.multiplicity) for e in dm.essential] == [(1.0, 1)]
