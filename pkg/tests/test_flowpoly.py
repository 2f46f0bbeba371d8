import random
from fractions import Fraction

import pytest

from pasmpoly import (
    BOTTOM,
    TOP,
    Partition,
    SkewShape,
    build_flow_graph,
    build_poset,
    count_integer_flows,
    enumerate_filters,
    is_flow,
    order_point_to_flow,
    order_polynomial_value,
    planar_hasse,
    truncated_dual,
)
from pasmpoly.flowpoly import FlowGraph, flow_to_json
from pasmpoly.skewposet import SkewPoset, filter_indicator

from families import all_skew_shapes
from golden import ORDER_POINT_422_31

F = Fraction

EXAMPLE = SkewShape(Partition([4, 2, 2]), Partition([3, 1]), 4, 5)


def single_element_poset():
    return SkewPoset([(1, 1)], [])


def test_planar_hasse_single_element():
    H = planar_hasse(single_element_poset())
    assert len(H.nodes) == 3
    assert len(H.edges) == 4  # bottom-p, p-top, two arcs
    assert len(H.faces) == 3
    assert H.bounded_face_count() == 2


def test_planar_hasse_empty_poset():
    H = planar_hasse(SkewPoset([], []))
    assert len(H.nodes) == 2
    assert len(H.edges) == 3  # one chain edge plus two arcs
    assert H.bounded_face_count() == 2


def test_planar_hasse_worked_example():
    P = build_poset(EXAMPLE)
    H = planar_hasse(P)
    assert len(H.nodes) == 6
    # 2 covers + 3 minimal + 2 maximal attachments + 2 arcs
    assert len(H.edges) == 9
    # Euler: F = 2 - V + E = 5 total faces, so 4 bounded.
    assert len(H.faces) == 5
    assert H.bounded_face_count() == 4


def test_planar_hasse_euler_sweep():
    # The Euler check runs in the constructor; also verify the bounded face
    # count formula covers + #min + #max - |P| + 1.
    for shape in all_skew_shapes(6):
        P = build_poset(shape)
        H = planar_hasse(P)
        expected = (
            len(P.covers)
            + len(P.minimal_indices())
            + len(P.maximal_indices())
            - len(P)
            + 1
        ) if len(P) else 2
        assert H.bounded_face_count() == expected


def test_truncated_dual_single_element():
    G = truncated_dual(planar_hasse(single_element_poset()))
    assert G.num_vertices == 2
    assert len(G.edges) == 2
    assert all(e.tail == G.source and e.head == G.sink for e in G.edges)
    crossed = {e.crossed for e in G.edges}
    assert crossed == {(BOTTOM, (1, 1)), ((1, 1), TOP)}


def test_truncated_dual_empty_poset():
    G = truncated_dual(planar_hasse(SkewPoset([], [])))
    assert G.num_vertices == 2
    assert len(G.edges) == 1
    assert G.edges[0].crossed == (BOTTOM, TOP)


def test_truncated_dual_worked_example():
    P = build_poset(EXAMPLE)
    H = planar_hasse(P)
    G = truncated_dual(H)
    assert G.num_vertices == 4
    # one dual edge per non-arc diagram edge
    assert len(G.edges) == 7
    assert not G.in_edges(G.source)
    assert not G.out_edges(G.sink)
    G.topological_order()


def test_dual_is_connected_despite_disconnected_poset():
    # The example poset has an isolated element; the sentinels join all
    # components, so the dual stays connected (construction raises if not).
    P = build_poset(EXAMPLE)
    assert len(P.minimal_indices()) == 3
    build_flow_graph(P)


def test_order_point_to_flow_single_element():
    G = build_flow_graph(single_element_poset())
    fl = order_point_to_flow({(1, 1): F(1, 3)}, G)
    assert sorted(fl.values()) == [F(1, 3), F(2, 3)]
    assert is_flow(fl, G)


def test_order_point_to_flow_rejects_outsiders():
    G = build_flow_graph(single_element_poset())
    with pytest.raises(ValueError):
        order_point_to_flow({(1, 1): 2}, G)


def test_filter_indicators_give_unit_path_flows():
    for shape in all_skew_shapes(5):
        P = build_poset(shape)
        G = build_flow_graph(P)
        for filt in enumerate_filters(P):
            fl = order_point_to_flow(filter_indicator(P, filt), G)
            assert is_flow(fl, G)
            assert all(v in (0, 1) for v in fl.values())
            # unit 0/1 flow is supported on a single source-sink path
            support = [k for k, v in fl.items() if v == 1]
            walk, at = 0, G.source
            while at != G.sink:
                outs = [k for k in support if G.edges[k].tail == at]
                assert len(outs) == 1
                at = G.edges[outs[0]].head
                walk += 1
            assert walk == len(support)


def test_worked_example_flow_values():
    P = build_poset(EXAMPLE)
    G = build_flow_graph(P)
    fl = order_point_to_flow(ORDER_POINT_422_31, G)
    assert is_flow(fl, G)
    values = sorted(fl.values())
    assert values == [F(1, 5), F(3, 10), F(3, 10), F(3, 10), F(2, 5), F(1, 2), F(7, 10)]
    outflow = sum(fl[k] for k in G.out_edges(G.source))
    assert outflow == 1


def test_is_flow_examples():
    G = build_flow_graph(single_element_poset())
    assert is_flow({0: F(1, 2), 1: F(1, 2)}, G)
    assert not is_flow({0: 1, 1: F(1, 5)}, G)
    assert not is_flow({0: F(-1, 2), 1: F(3, 2)}, G)
    with pytest.raises(ValueError):
        is_flow({0: 1}, G)


def test_random_order_points_map_to_flows():
    rng = random.Random(7)
    for shape in all_skew_shapes(5):
        P = build_poset(shape)
        G = build_flow_graph(P)
        cells = list(P.elements)
        for _ in range(20):
            f = {c: F(rng.randrange(0, 101), 100) for c in cells}
            for a, b in P.covers:
                if f[cells[b]] < f[cells[a]]:
                    f[cells[b]] = f[cells[a]]
            fl = order_point_to_flow(f, G)
            assert is_flow(fl, G)


def test_order_point_to_flow_is_injective():
    P = build_poset(EXAMPLE)
    G = build_flow_graph(P)
    seen = {}
    for filt in enumerate_filters(P):
        f = filter_indicator(P, filt)
        key = tuple(sorted(order_point_to_flow(f, G).items()))
        assert key not in seen
        seen[key] = filt


def test_integer_flow_counts_match_order_polynomial():
    for shape in all_skew_shapes(5, max_skew_size=5):
        P = build_poset(shape)
        G = build_flow_graph(P)
        for t in (0, 1, 2):
            assert count_integer_flows(G, t) == order_polynomial_value(P, t + 1), (shape, t)


def test_count_integer_flows_validates():
    G = build_flow_graph(single_element_poset())
    with pytest.raises(ValueError):
        count_integer_flows(G, -1)


def test_flow_graph_dot_and_json():
    P = build_poset(EXAMPLE)
    G = build_flow_graph(P)
    dot = G.to_dot()
    assert "digraph" in dot and "->" in dot and "bottom" in dot
    data = G.to_json()
    assert data["vertices"] == 4
    assert len(data["edges"]) == 7
    fl = order_point_to_flow(ORDER_POINT_422_31, G)
    encoded = flow_to_json(fl)
    assert set(encoded) == {str(k) for k in range(7)}


def test_flow_graph_rejects_tampering():
    # A graph with an edge into the source is rejected by the dual builder;
    # simulate by constructing the FlowGraph directly and checking is_flow
    # still behaves.
    from pasmpoly.flowpoly import FlowEdge

    G = FlowGraph(single_element_poset(), 2, [FlowEdge(0, 1, (BOTTOM, TOP))], 0, 1)
    assert is_flow({0: 1}, G)
