import numpy as np
import pytest

from dcsp.errors import InvalidDegreeError
from dcsp.network import (
    Topology,
    WireCounter,
    broadcast_all,
    exchange_neighbors,
    full_topology,
    ring_topology,
    topology_from_listing,
)


def offset_formula_neighbors(L, g, l):
    # oracle: direct evaluation of the 1-based wraparound offset formula
    return sorted({l} | {(l + i) % L + 1 for i in range(1, g)})


class TestRingTopology:
    def test_six_nodes_degree_three(self):
        topo = ring_topology(6, 3)
        assert topo.neighbors[0].tolist() == [1, 3, 4]
        for l in range(1, 7):
            assert topo.neighbors[l - 1].tolist() == offset_formula_neighbors(6, 3, l)

    def test_degree_equals_size(self):
        topo = ring_topology(6, 3)
        assert all(len(g) == 3 for g in topo.neighbors)

    def test_full_collaboration(self):
        topo = ring_topology(5, 5)
        assert all(g.tolist() == [1, 2, 3, 4, 5] for g in topo.neighbors)
        assert topo.is_full()

    def test_two_nodes(self):
        topo = ring_topology(2, 2)
        assert topo.neighbors[0].tolist() == [1, 2]
        assert topo.neighbors[1].tolist() == [1, 2]

    def test_invalid_degree(self):
        with pytest.raises(InvalidDegreeError):
            ring_topology(4, 1)
        with pytest.raises(InvalidDegreeError):
            ring_topology(4, 5)

    @pytest.mark.parametrize("L,g", [(2, 2), (5, 2), (6, 3), (8, 5), (9, 9)])
    def test_link_count_matches_formula(self, L, g):
        assert ring_topology(L, g).neighbor_link_count == L * (g - 1)


class TestTopologyValidation:
    def test_must_contain_self(self):
        with pytest.raises(ValueError):
            Topology(2, [np.array([2]), np.array([1, 2])])

    def test_ids_in_range(self):
        with pytest.raises(ValueError):
            Topology(2, [np.array([1, 3]), np.array([1, 2])])


class TestTopologyFromListing:
    def test_explicit_groups(self):
        topo = topology_from_listing("1,3,4; 2,4,5; 3,5,6; 4,6,1; 5,1,2; 6,2,3")
        assert topo.L == 6
        assert topo.neighbors[0].tolist() == [1, 3, 4]
        assert topo.neighbors[5].tolist() == [2, 3, 6]

    def test_self_is_added_when_omitted(self):
        topo = topology_from_listing("2,3; 1,3; 1,2")
        assert all(l in topo.neighbors[l - 1] for l in range(1, 4))

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            topology_from_listing("1,5; 1,2")


class TestExchangeNeighbors:
    def test_full_mesh_count(self):
        topo = full_topology(3)
        counter = WireCounter()
        exchange_neighbors([np.zeros(5)] * 3, topo, counter, 5)
        assert counter.total == 2 * 3 * 5 == 30

    def test_ring_count_matches_cost_term(self):
        topo = ring_topology(6, 3)
        counter = WireCounter()
        exchange_neighbors([np.zeros(200)] * 6, topo, counter, 200)
        assert counter.neighbor_scalars == 200 * 6 * 2 == 2400

    def test_inbox_holds_own_neighborhood(self):
        topo = ring_topology(6, 3)
        payloads = [np.full(2, float(l)) for l in range(1, 7)]
        counter = WireCounter()
        inboxes = exchange_neighbors(payloads, topo, counter, 2)
        for l in range(1, 7):
            expected = set(topo.neighbors[l - 1].tolist()) - {l}
            assert set(inboxes[l - 1]) == expected
            for j, msg in inboxes[l - 1].items():
                assert msg.sender == j and msg.recipient == l
                assert np.all(msg.payload == float(j))

    def test_conservation(self):
        topo = ring_topology(7, 4)
        counter = WireCounter()
        inboxes = exchange_neighbors([np.zeros(3)] * 7, topo, counter, 3)
        received = sum(msg.declared_length for box in inboxes for msg in box.values())
        assert received == counter.total


class TestBroadcastAll:
    def test_support_frame(self):
        counter = WireCounter()
        broadcast_all([np.arange(10)] * 6, full_topology(6), counter, 10)
        assert counter.broadcast_scalars == 10 * 5 * 6 == 300

    def test_two_node_scalar(self):
        counter = WireCounter()
        broadcast_all([1.0, 2.0], full_topology(2), counter, 1)
        assert counter.total == 2

    def test_residual_norm_round(self):
        counter = WireCounter()
        broadcast_all([0.0] * 6, full_topology(6), counter, 1)
        assert counter.total == 30

    def test_everyone_hears_everyone(self):
        counter = WireCounter()
        inboxes = broadcast_all(list(range(4)), full_topology(4), counter, 1)
        for l in range(1, 5):
            assert set(inboxes[l - 1]) == set(range(1, 5)) - {l}
        received = sum(m.declared_length for box in inboxes for m in box.values())
        assert received == counter.total


def test_counter_breakdown_and_determinism():
    def run():
        topo = ring_topology(5, 3)
        counter = WireCounter()
        exchange_neighbors([np.zeros(4)] * 5, topo, counter, 4, "correlation")
        broadcast_all([np.zeros(2)] * 5, topo, counter, 2, "local support")
        broadcast_all([0.0] * 5, topo, counter, 1, "residual norm")
        return counter

    a, b = run(), run()
    assert a.neighbor_scalars == 5 * 2 * 4
    assert a.broadcast_scalars == 5 * 4 * 2 + 5 * 4
    assert a.rounds == b.rounds
    assert a.total == b.total
    labels = [r[0] for r in a.rounds]
    assert labels == ["correlation", "local support", "residual norm"]
