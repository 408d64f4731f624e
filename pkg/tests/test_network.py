from __future__ import annotations

import numpy as np
import pytest

import macroscale as ms
from macroscale.network import blanket_matrix

from nets import directed_ring, random_symmetric_net


class TestNetworkConstruction:
    def test_rejects_negative_weights(self):
        with pytest.raises(ValueError):
            ms.Network([[0.0, -1.0], [0.0, 0.0]])

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            ms.Network([[0.0, np.inf], [0.0, 0.0]])

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            ms.Network(np.ones((2, 3)))

    def test_rejects_label_mismatch(self):
        with pytest.raises(ValueError):
            ms.Network(np.eye(2), labels=("a",))

    def test_weights_immutable(self):
        net = ms.Network(np.eye(3))
        with pytest.raises(ValueError):
            net.weights[0, 0] = 5.0


class TestNormalize:
    def test_proportional_scaling(self):
        net = ms.normalize(ms.Network([[2.0, 2.0, 0.0]] + [[0.0] * 3] * 2))
        assert net.weights[0].tolist() == [0.5, 0.5, 0.0]

    def test_zero_row_preserved_and_flagged(self):
        net = ms.normalize(ms.Network(np.zeros((3, 3))))
        assert net.weights[1].tolist() == [0.0, 0.0, 0.0]
        assert net.dangling.all()

    def test_single_self_loop_identity(self):
        net = ms.normalize(ms.Network([[1.0]]))
        assert net.weights.tolist() == [[1.0]]

    def test_idempotent_bit_for_bit(self):
        rng = np.random.default_rng(3)
        raw = ms.Network(rng.random((6, 6)))
        once = ms.normalize(raw)
        twice = ms.normalize(once)
        assert np.array_equal(once.weights, twice.weights)

    def test_rows_sum_to_one(self):
        net = ms.normalize(random_symmetric_net(11))
        sums = net.weights.sum(axis=1)
        assert np.all(np.abs(sums[sums > 0] - 1.0) <= 1e-12)


class TestStationary:
    def test_four_cycle_uniform(self):
        pi = ms.stationary(directed_ring(4)).pi
        assert pi == pytest.approx([0.25] * 4, abs=1e-12)

    def test_hub_spoke_analytic(self, hub_spoke):
        # Analytic solution of the balance equations: the hub holds half the
        # mass, the four spokes split the rest.
        result = ms.stationary(hub_spoke)
        assert result.converged
        assert result.pi == pytest.approx([0.5, 0.125, 0.125, 0.125, 0.125], abs=1e-10)

    def test_disconnected_components_keep_uniform_mass(self, clique_selfloop):
        result = ms.stationary(clique_selfloop)
        assert result.pi == pytest.approx([0.2] * 5, abs=1e-10)

    def test_fixed_point_residual(self, hub_spoke):
        res = ms.stationary(hub_spoke)
        w = ms.normalize(hub_spoke).weights
        assert np.abs(res.pi @ w - res.pi).sum() <= 1e-10

    def test_matches_dominant_left_eigenvector(self):
        net = random_symmetric_net(5, n=8)
        pi = ms.stationary(net).pi
        values, vectors = np.linalg.eig(net.weights.T)
        lead = vectors[:, np.argmax(values.real)].real
        lead = np.abs(lead) / np.abs(lead).sum()
        assert np.abs(pi - lead).sum() <= 1e-8

    def test_bipartite_star_converges(self):
        # Plain power iteration oscillates on bipartite graphs; the damped
        # chain must still converge to the degree-proportional solution.
        res = ms.stationary(ms.star(9))
        assert res.converged
        assert res.pi[0] == pytest.approx(0.5, abs=1e-10)

    def test_max_iter_exhaustion_not_an_error(self):
        res = ms.stationary(ms.cycle(12), tol=0.0, max_iter=3)
        assert not res.converged
        assert res.iterations == 3
        assert res.pi.sum() == pytest.approx(1.0, abs=1e-10)

    def test_walk_step_redistributes_dangling_mass(self):
        net = ms.normalize(ms.Network([[0.0, 1.0], [0.0, 0.0]]))
        stepped = ms.walk_step(net, np.array([0.0, 1.0]))
        assert stepped == pytest.approx([0.5, 0.5])


class TestMarkovBlanket:
    def test_chain_head(self):
        # a -> b -> c: a's blanket is just its child b.
        chain = ms.Network([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        assert ms.markov_blanket(chain, 0) == {1}

    def test_chain_middle(self):
        chain = ms.Network([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        assert ms.markov_blanket(chain, 1) == {0, 2}

    def test_co_parent(self):
        # a and c both feed b, so c is in a's blanket.
        net = ms.Network([[0, 1, 0], [0, 0, 0], [0, 1, 0]])
        assert ms.markov_blanket(net, 0) == {1, 2}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            ms.markov_blanket(ms.Network(np.eye(2)), 2)

    def test_child_symmetry(self):
        net = random_symmetric_net(7, n=6)
        adj = net.weights > 0
        for i in range(net.n):
            for j in np.flatnonzero(adj[i]):
                if i != j:
                    assert i in ms.markov_blanket(net, int(j))

    def test_blanket_matrix_matches_single_queries(self):
        net = random_symmetric_net(13, n=7)
        mat = blanket_matrix(net)
        for i in range(net.n):
            assert set(np.flatnonzero(mat[i])) == ms.markov_blanket(net, i)


class TestEdgeList:
    def test_round_trip_integer_ids(self, tmp_path):
        net = ms.erdos_renyi(9, 0.4, seed=2)
        path = tmp_path / "net.tsv"
        ms.write_edge_list(net, path)
        back = ms.read_edge_list(path)
        assert np.allclose(back.weights, net.weights, atol=0)

    def test_labels_first_seen_order(self, tmp_path):
        path = tmp_path / "net.tsv"
        path.write_text('"b"\t"a"\t2\n"a"\t"b"\t1\n# comment\n')
        net = ms.read_edge_list(path)
        assert net.labels == ("b", "a")
        assert net.weights[0, 1] == 2.0
        assert net.weights[1, 0] == 1.0

    def test_weight_defaults_to_one(self, tmp_path):
        path = tmp_path / "net.tsv"
        path.write_text("0\t1\n")
        assert ms.read_edge_list(path).weights[0, 1] == 1.0

    def test_bad_weight_rejected(self, tmp_path):
        path = tmp_path / "net.tsv"
        path.write_text("0\t1\tbogus\n")
        with pytest.raises(ValueError):
            ms.read_edge_list(path)

    def test_integer_ids_preserve_gaps(self, tmp_path):
        path = tmp_path / "net.tsv"
        path.write_text("1\t3\t1.0\n")
        net = ms.read_edge_list(path)
        assert net.n == 4
        assert net.weights[1, 3] == 1.0
