import pytest

from graphtda import filter_clique, parse_graph
from graphtda.parallel import map_ordered, worker_count

C6_COMPLETE = "\n".join(
    f"v{i} v{j} {i + j}" for i in range(6) for j in range(i + 1, 6)
)


def test_default_sequential(monkeypatch):
    monkeypatch.delenv("GRAPHTDA_THREADS", raising=False)
    assert worker_count() == 1


def test_zero_means_auto(monkeypatch):
    monkeypatch.setenv("GRAPHTDA_THREADS", "0")
    assert worker_count() >= 1


def test_explicit_cap(monkeypatch):
    monkeypatch.setenv("GRAPHTDA_THREADS", "3")
    assert worker_count() == 3


def test_invalid_rejected(monkeypatch):
    monkeypatch.setenv("GRAPHTDA_THREADS", "many")
    with pytest.raises(ValueError):
        worker_count()
    monkeypatch.setenv("GRAPHTDA_THREADS", "-2")
    with pytest.raises(ValueError):
        worker_count()


def test_map_ordered_keeps_order(monkeypatch):
    monkeypatch.setenv("GRAPHTDA_THREADS", "4")
    items = list(range(1000))
    assert map_ordered(lambda x: x * x, items) == [x * x for x in items]


def test_filtration_identical_under_threads(monkeypatch):
    g = parse_graph(C6_COMPLETE)
    monkeypatch.delenv("GRAPHTDA_THREADS", raising=False)
    sequential = filter_clique(g)
    monkeypatch.setenv("GRAPHTDA_THREADS", "4")
    threaded = filter_clique(g)
    assert sequential == threaded
