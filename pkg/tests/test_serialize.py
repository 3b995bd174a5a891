import pytest

from graphtda import parse_graph, serialize
from graphtda.complexes import SimplicialComplex
from graphtda.filtrations import extended_pair, filter_clique
from graphtda.persistence import PersistenceDiagram, reduce

INF = float("inf")


class TestValues:
    def test_encode_decode(self):
        assert serialize.encode_value(INF) == "inf"
        assert serialize.encode_value(-INF) == "-inf"
        assert serialize.encode_value(1.5) == 1.5
        assert serialize.decode_value("inf") == INF
        assert serialize.decode_value("-inf") == -INF
        assert serialize.decode_value(2) == 2.0

    def test_rejects_junk(self):
        with pytest.raises(serialize.DocumentError):
            serialize.decode_value("oo")
        with pytest.raises(serialize.DocumentError):
            serialize.decode_value(None)
        with pytest.raises(serialize.DocumentError):
            serialize.decode_value(True)


class TestComplexDocs:
    def test_round_trip(self):
        k = SimplicialComplex.from_facets([("a", "b", "c"), ("c", "d")])
        assert serialize.complex_from_doc(serialize.complex_to_doc(k)) == k

    def test_vertex_mismatch_rejected(self):
        doc = {"vertices": ["a", "b", "z"], "facets": [["a", "b"]]}
        with pytest.raises(serialize.DocumentError, match="vertex"):
            serialize.complex_from_doc(doc)

    def test_empty_complex(self):
        k = SimplicialComplex()
        assert serialize.complex_from_doc(serialize.complex_to_doc(k)) == k


class TestFilteredDocs:
    def test_round_trip_with_sentinels(self):
        pair = extended_pair(parse_graph("a b 1\nb c 2"))
        doc = serialize.filtered_to_doc(pair.descending)
        assert serialize.filtered_from_doc(doc) == pair.descending

    def test_non_monotone_doc_rejected(self):
        doc = {
            "simplices": [
                {"vertices": ["a"], "value": 5.0},
                {"vertices": ["b"], "value": 0.0},
                {"vertices": ["a", "b"], "value": 1.0},
            ]
        }
        with pytest.raises(serialize.DocumentError, match="monotone"):
            serialize.filtered_from_doc(doc)


class TestDiagramDocs:
    def test_round_trip(self):
        d = PersistenceDiagram(1, [(0.0, 2.0), (-INF, 1.0)], [3.0, -INF])
        assert serialize.diagram_from_doc(serialize.diagram_to_doc(d)) == d

    def test_csv_round_trip(self):
        fc = filter_clique(parse_graph("1 2 1\n2 3 2\n3 4 3\n1 4 4"))
        diagrams = reduce(fc, 1)
        text = serialize.diagrams_to_csv(diagrams)
        loaded = serialize.diagrams_from_csv(text)
        nonempty = [d for d in diagrams if d.points or d.essential]
        assert loaded == nonempty

    def test_csv_rejects_infinite_proper_death(self):
        d = PersistenceDiagram(0, [(0.0, INF)])
        with pytest.raises(ValueError, match="CSV"):
            serialize.diagrams_to_csv([d])

    def test_csv_negative_infinity_birth(self):
        d = PersistenceDiagram(0, [(-INF, -4.0)], [-INF])
        text = serialize.diagrams_to_csv([d])
        assert serialize.diagrams_from_csv(text) == [d]

    def test_csv_bad_row(self):
        with pytest.raises(serialize.DocumentError, match="line 1"):
            serialize.diagrams_from_csv("0,1.0,2.0\n")

    def test_dumps_deterministic(self):
        d = PersistenceDiagram(0, [(0.0, 1.0)])
        doc = serialize.diagram_to_doc(d)
        assert serialize.dumps(doc) == serialize.dumps(doc)
