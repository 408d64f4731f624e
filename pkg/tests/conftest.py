from __future__ import annotations

import pytest

import macroscale as ms

from nets import clique_selfloop_net, directed_ring, funnel_abc_net, hub_spoke_net


@pytest.fixture
def clique_selfloop() -> ms.Network:
    return clique_selfloop_net()


@pytest.fixture
def directed_ring8() -> ms.Network:
    return directed_ring(8)


@pytest.fixture
def hub_spoke() -> ms.Network:
    return hub_spoke_net()


@pytest.fixture
def funnel_abc() -> ms.Network:
    return funnel_abc_net()
