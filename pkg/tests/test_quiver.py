import json

import pytest
from hypothesis import given, strategies as st

from qdyn import (
    DomainError,
    ParseError,
    adjacency,
    classify_graph,
    connected_components,
    euler_form,
    euler_matrix,
    make_quiver,
    parse_quiver,
    subquiver,
)
from qdyn.catalog import (
    dynkin_edges,
    euclidean_edges,
    kronecker_quiver,
    orientations,
    quiver_from_edges,
)
from qdyn.linalg import fraction_inverse
from qdyn.quiver import is_acyclic, topological_order

from oracles import euler_value


def test_parse_k3():
    q = parse_quiver('{"vertices":["1","2"],"arrows":[["1","2"],["1","2"],["1","2"]]}')
    assert q.vertices == ("1", "2")
    assert len(q.arrows) == 3
    assert q.arrow_count("1", "2") == 3


def test_parse_a3_linear():
    q = parse_quiver('{"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"]]}')
    assert classify_graph(q).label == "A_3"


def test_parse_rejects_edge_loop():
    with pytest.raises(ParseError, match="edge-loop"):
        parse_quiver('{"vertices":["a"],"arrows":[["a","a"]]}')


def test_parse_rejects_duplicate_vertex():
    with pytest.raises(ParseError, match="duplicate vertex"):
        parse_quiver('{"vertices":["a","a"],"arrows":[]}')


def test_parse_rejects_unknown_endpoint():
    with pytest.raises(ParseError, match="unknown arrow endpoint"):
        parse_quiver('{"vertices":["a"],"arrows":[["a","b"]]}')


def test_parse_reports_json_location():
    with pytest.raises(ParseError, match="line 2"):
        parse_quiver('{"vertices":["a"],\n "arrows": }')


def test_parse_rejects_bad_shapes():
    with pytest.raises(ParseError):
        parse_quiver('[1,2]')
    with pytest.raises(ParseError, match="missing"):
        parse_quiver('{"vertices":["a"]}')
    with pytest.raises(ParseError, match="pair"):
        parse_quiver('{"vertices":["a","b"],"arrows":[["a"]]}')


def test_euler_matrix_k3():
    assert euler_matrix(kronecker_quiver(3)) == ((1, -3), (0, 1))


def test_euler_matrix_no_arrows_identity():
    q = make_quiver(["a", "b", "c"], [])
    assert euler_matrix(q) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_euler_matrix_a2():
    q = make_quiver(["1", "2"], [("1", "2")])
    assert euler_matrix(q) == ((1, -1), (0, 1))


def test_euler_form_k3_examples():
    k3 = kronecker_quiver(3)
    assert euler_form(k3, (1, 0), (0, 1)) == -3
    assert euler_form(k3, (1, 1), (1, 1)) == -1  # n^2 + m^2 - l m n at (1,1)
    assert euler_form(k3, (0, 0), (5, 7)) == 0


def test_euler_form_accepts_maps():
    k3 = kronecker_quiver(3)
    assert euler_form(k3, {"1": 1, "2": 0}, {"2": 1}) == -3
    with pytest.raises(DomainError, match="unknown vertex"):
        euler_form(k3, {"x": 1}, {"1": 1})
    with pytest.raises(DomainError, match="length"):
        euler_form(k3, (1, 2, 3), (1, 0))


def test_euler_form_matches_matrix_on_basis():
    for q in [kronecker_quiver(4),
              quiver_from_edges(dynkin_edges("D", 5)),
              make_quiver(["a", "b", "c"], [("a", "b"), ("a", "c"), ("b", "c")])]:
        m = euler_matrix(q)
        for i in range(q.n):
            for j in range(q.n):
                ei = tuple(1 if k == i else 0 for k in range(q.n))
                ej = tuple(1 if k == j else 0 for k in range(q.n))
                assert euler_form(q, ei, ej) == m[i][j]


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=2),
       st.lists(st.integers(-5, 5), min_size=2, max_size=2))
def test_euler_form_agrees_with_direct_formula(a, b):
    k3 = kronecker_quiver(3)
    assert euler_form(k3, a, b) == euler_value(2, [(0, 1)] * 3, a, b)


def test_classify_kronecker_family():
    assert classify_graph(kronecker_quiver(1)).label == "A_2"
    assert classify_graph(kronecker_quiver(2)).label == "A~_1"
    assert classify_graph(kronecker_quiver(5)).label == "K(5)"
    gc = classify_graph(kronecker_quiver(3))
    assert gc.is_kronecker and gc.index == 3


def test_classify_d4_tilde_any_orientation():
    for q in orientations(euclidean_edges("D", 4)):
        assert classify_graph(q).label == "D~_4"


def test_classify_catalog_roundtrip():
    from conftest import catalog_quivers

    for name, q in catalog_quivers(9, acyclic_only=False):
        assert classify_graph(q).label == name


def test_classify_flags():
    cyc = make_quiver(["1", "2", "3"], [("1", "2"), ("2", "3"), ("3", "1")])
    gc = classify_graph(cyc)
    assert gc.label == "A~_2" and not gc.acyclic and gc.connected
    disc = make_quiver(["1", "2"], [])
    gc = classify_graph(disc)
    assert gc.is_wild and not gc.connected and gc.acyclic


def test_classify_wild_shapes():
    assert classify_graph(make_quiver(["1", "2", "3"],
                                      [("1", "2"), ("1", "2"), ("2", "3")])).is_wild
    star5 = make_quiver([str(i) for i in range(1, 7)],
                        [(str(i), "6") for i in range(1, 6)])
    assert classify_graph(star5).is_wild
    # cycle with a tail has as many edges as vertices but is not A~
    tadpole = make_quiver(["1", "2", "3", "4"],
                          [("1", "2"), ("2", "3"), ("1", "3"), ("3", "4")])
    assert classify_graph(tadpole).is_wild


def test_classify_orientation_independent(small_corpus):
    import random

    rng = random.Random(7)
    for q in rng.sample(small_corpus, 60):
        base = classify_graph(q).label
        for _ in range(3):
            arrows = [a if rng.random() < 0.5 else (a[1], a[0]) for a in q.arrows]
            flipped = make_quiver(q.vertices, arrows)
            assert classify_graph(flipped).label == base


def test_subquiver_s2_restriction():
    s2 = make_quiver(["a1", "a2", "a3", "v"],
                     [("a1", "a2"), ("a3", "a2"), ("v", "a1"), ("v", "a2"), ("v", "a3")])
    sub = subquiver(s2, ["a1", "a2", "a3"])
    assert classify_graph(sub).label == "A_3"
    assert set(sub.arrows) == {("a1", "a2"), ("a3", "a2")}


def test_subquiver_identity_and_single():
    k3 = kronecker_quiver(3)
    assert subquiver(k3, ["1", "2"]) == k3
    one = subquiver(k3, ["1"])
    assert one.vertices == ("1",) and one.arrows == ()


def test_subquiver_errors():
    k3 = kronecker_quiver(3)
    with pytest.raises(DomainError, match="nonempty"):
        subquiver(k3, [])
    with pytest.raises(DomainError, match="unknown vertex"):
        subquiver(k3, ["1", "9"])


def test_subquiver_composes():
    q = quiver_from_edges(dynkin_edges("E", 6))
    a = ["1", "2", "3", "4", "6"]
    b = ["1", "2", "3"]
    assert subquiver(subquiver(q, a), b) == subquiver(q, b)


def test_adjacency_s1_source():
    s1 = make_quiver(["v", "a1", "a2"],
                     [("v", "a1"), ("v", "a1"), ("v", "a2"), ("a2", "a1")])
    adj = adjacency(s1, ["a1", "a2"], "v")
    assert adj.edges_in == 3 and adj.edges_out == 0
    assert adj.is_adjacent and adj.v_is_source_in_union and not adj.v_is_sink_in_union


def test_adjacency_disconnected_vertex():
    q = make_quiver(["1", "2", "3"], [("1", "2")])
    adj = adjacency(q, ["1", "2"], "3")
    assert not adj.is_adjacent


def test_adjacency_k3():
    adj = adjacency(kronecker_quiver(3), ["2"], "1")
    assert adj.edges_in == 3 and adj.edges_out == 0 and adj.v_is_source_in_union


def test_adjacency_rejects_inside_vertex():
    with pytest.raises(DomainError):
        adjacency(kronecker_quiver(3), ["1", "2"], "1")


def test_connected_components():
    q = make_quiver(["1", "2", "3", "4"], [("1", "2"), ("3", "4")])
    comps = connected_components(q)
    assert [c.vertices for c in comps] == [("1", "2"), ("3", "4")]


def test_topological_euler_matrix_upper_triangular(small_corpus):
    import random

    rng = random.Random(3)
    for q in rng.sample(small_corpus, 40):
        order = topological_order(q)
        m = euler_matrix(q)
        perm = [[m[order[i]][order[j]] for j in range(q.n)] for i in range(q.n)]
        for i in range(q.n):
            assert perm[i][i] == 1
            for j in range(i):
                assert perm[i][j] == 0
        # unit determinant => exact integer inverse exists
        inv = fraction_inverse(m)
        assert all(x.denominator == 1 for row in inv for x in row)


def test_quiver_json_roundtrip():
    q = kronecker_quiver(3)
    assert parse_quiver(json.dumps(q.to_json_obj())) == q


def test_acyclicity_detection():
    assert is_acyclic(make_quiver(["1", "2"], [("1", "2")]))
    assert not is_acyclic(make_quiver(["1", "2", "3"], [("1", "2"), ("2", "3"), ("3", "1")]))
