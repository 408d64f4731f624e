from __future__ import annotations

import itertools

import numpy as np
import pytest

import macroscale as ms

from nets import directed_ring, random_symmetric_net
from oracles import textbook_ei


def test_deterministic_ring_is_exactly_three_bits(directed_ring8):
    out = ms.effective_information(directed_ring8)
    assert out.ei == 3.0
    assert out.determinism == 3.0
    assert out.degeneracy == 0.0
    assert out.effective_nodes == 8


def test_full_degeneracy_single_target():
    # Five nodes all pointing at node 0 (which self-loops): the mean
    # out-weight vector is a point mass, so EI vanishes.
    w = np.zeros((5, 5))
    w[:, 0] = 1.0
    out = ms.effective_information(ms.Network(w))
    assert out.ei == pytest.approx(0.0, abs=1e-12)
    assert out.determinism == pytest.approx(np.log2(5), abs=1e-12)
    assert out.degeneracy == pytest.approx(np.log2(5), abs=1e-12)


def test_complete_graph_without_self_loops():
    out = ms.effective_information(ms.complete(4))
    assert out.ei == pytest.approx(2.0 - np.log2(3.0), abs=1e-12)


def test_zero_edges_gives_zero_breakdown():
    out = ms.effective_information(ms.Network(np.zeros((4, 4))))
    assert out == ms.EIBreakdown(0.0, 0.0, 0.0, 0.0, 0)


def test_decomposition_identities_on_random_networks():
    for seed in range(12):
        net = random_symmetric_net(seed)
        out = ms.effective_information(net)
        assert out.ei == pytest.approx(out.determinism - out.degeneracy, abs=1e-12)
        expected_det = np.log2(out.effective_nodes) - out.indeterminism
        assert out.determinism == pytest.approx(expected_det, abs=1e-12)


def test_permutation_invariance():
    net = random_symmetric_net(21, n=6)
    rng = np.random.default_rng(0)
    perm = rng.permutation(6)
    permuted = ms.Network(net.weights[np.ix_(perm, perm)])
    a, b = ms.effective_information(net), ms.effective_information(permuted)
    assert a.ei == pytest.approx(b.ei, abs=1e-12)
    assert a.determinism == pytest.approx(b.determinism, abs=1e-12)
    assert a.degeneracy == pytest.approx(b.degeneracy, abs=1e-12)


def test_bounds_and_identical_rows():
    for seed in range(8):
        net = random_symmetric_net(seed + 50)
        out = ms.effective_information(net)
        assert 0.0 <= out.ei <= np.log2(out.effective_nodes) + 1e-12
    # all rows identical -> complete degeneracy
    row = np.array([0.25, 0.5, 0.25, 0.0])
    net = ms.Network(np.tile(row, (4, 1)))
    assert ms.effective_information(net).ei == pytest.approx(0.0, abs=1e-12)


class TestBruteForceOracle:
    """Direct textbook evaluation on small weight grids from {0, 1/2, 1}."""

    def test_exhaustive_two_nodes(self):
        values = (0.0, 0.5, 1.0)
        for flat in itertools.product(values, repeat=4):
            w = np.array(flat).reshape(2, 2)
            net = ms.normalize(ms.Network(w))
            assert ms.effective_information(net).ei == pytest.approx(
                textbook_ei(net.weights), abs=1e-12
            )

    @pytest.mark.parametrize("n", [3, 4])
    def test_sampled_grids(self, n):
        rng = np.random.default_rng(n)
        for _ in range(300):
            w = rng.choice([0.0, 0.5, 1.0], size=(n, n))
            net = ms.normalize(ms.Network(w))
            assert ms.effective_information(net).ei == pytest.approx(
                textbook_ei(net.weights), abs=1e-12
            )


def test_entropy_helper_handles_zeros():
    assert ms.shannon_entropy(np.array([0.5, 0.5, 0.0])) == 1.0
    assert ms.shannon_entropy(np.array([1.0])) == 0.0
