"""Round-synchronous message passing with per-scalar wire accounting.

Communication cost is counted in transmitted scalars, pairwise (every
recipient is charged separately; there is no broadcast discount).  Message
payloads are charged at a fixed frame length declared by the caller, so an
undersized payload (e.g. a candidate support smaller than 2K) still costs
the full frame.  This makes the empirical tallies match the closed-form
cost expressions with strict integer equality.

Node ids are 1-based.  A node's neighborhood ``G_l`` always contains the
node itself; neighbor exchange delivers to node ``l`` the payload of every
``j`` in ``G_l`` minus itself, which is exactly what the per-neighborhood
sums in the pursuit algorithms consume.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidDegreeError


@dataclass
class Topology:
    """Node count and per-node neighbor sets over ids {1..L}."""

    L: int
    neighbors: list  # per node, sorted 1-based array containing the node itself

    def __post_init__(self):
        if len(self.neighbors) != self.L:
            raise ValueError("need one neighbor set per node")
        for l, g in enumerate(self.neighbors, start=1):
            g = np.asarray(g, dtype=np.int64)
            if l not in g:
                raise ValueError(f"node {l} missing from its own neighborhood")
            if g.min() < 1 or g.max() > self.L:
                raise ValueError("neighbor ids must lie in [1, L]")
            if np.unique(g).size != g.size:
                raise ValueError("neighbor ids must be distinct")
            self.neighbors[l - 1] = np.sort(g)

    @property
    def neighbor_link_count(self):
        """Total directed neighbor links, sum over nodes of (|G_l| - 1)."""
        return sum(len(g) - 1 for g in self.neighbors)

    def is_full(self):
        return all(len(g) == self.L for g in self.neighbors)


def full_topology(L: int) -> Topology:
    """Full collaboration: every node neighbors every other."""
    everyone = np.arange(1, L + 1, dtype=np.int64)
    return Topology(L, [everyone.copy() for _ in range(L)])


def ring_topology(L: int, g: int) -> Topology:
    """Symmetric-network neighborhoods of size ``g``.

    For g < L, node l's neighborhood is {l} joined with the 1-based
    wraparound offsets ``mod(l+i, L) + 1`` for i = 1..g-1.  For g = L the
    neighborhood is the whole network (full collaboration), at which point
    DCSP degenerates into decentralized SSP.
    """
    if g < 2 or g > L:
        raise InvalidDegreeError(f"need 2 <= g <= L, got g={g}, L={L}")
    if g == L:
        return full_topology(L)
    neighbors = []
    for l in range(1, L + 1):
        others = [(l + i) % L + 1 for i in range(1, g)]
        neighbors.append(np.sort(np.array([l] + others, dtype=np.int64)))
    return Topology(L, neighbors)


def topology_from_listing(text) -> Topology:
    """Topology from an explicit adjacency listing.

    One semicolon-separated group of comma-separated node ids per node,
    e.g. ``"1,3,4; 2,4,5; 3,5,6; ..."``; group l is node l's neighborhood
    and is completed with l itself if the listing omits it.
    """
    groups = [grp.strip() for grp in str(text).split(";") if grp.strip()]
    neighbors = []
    for l, grp in enumerate(groups, start=1):
        ids = {int(tok) for tok in grp.split(",") if tok.strip()}
        ids.add(l)
        neighbors.append(np.array(sorted(ids), dtype=np.int64))
    return Topology(len(groups), neighbors)


@dataclass
class WireCounter:
    """Running tally of transmitted scalars, split by message class."""

    neighbor_scalars: int = 0
    broadcast_scalars: int = 0
    rounds: list = field(default_factory=list)  # (label, class, scalars)

    @property
    def total(self):
        return self.neighbor_scalars + self.broadcast_scalars

    def _add(self, kind, label, scalars):
        if kind == "neighbor":
            self.neighbor_scalars += scalars
        else:
            self.broadcast_scalars += scalars
        self.rounds.append((label, kind, scalars))


@dataclass
class Message:
    """One framed transmission; ``declared_length`` scalars on the wire."""

    sender: int
    recipient: int
    payload: object
    declared_length: int


def exchange_neighbors(payloads, topology: Topology, counter: WireCounter,
                       declared_length: int, label: str = "neighbor"):
    """Neighborhood exchange: node l receives from every j in G_l \\ {l}.

    ``payloads`` holds one payload per node (index l-1 for node l).  Adds
    sum over nodes of (|G_l| - 1) * declared_length scalars to ``counter``.
    Returns per-node inboxes as dicts keyed by sender id.
    """
    if len(payloads) != topology.L:
        raise ValueError("need one payload per node")
    inboxes = []
    scalars = 0
    for l in range(1, topology.L + 1):
        box = {}
        for j in topology.neighbors[l - 1]:
            if j == int(l):
                continue
            box[int(j)] = Message(int(j), l, payloads[j - 1], declared_length)
            scalars += declared_length
        inboxes.append(box)
    counter._add("neighbor", label, scalars)
    return inboxes


def broadcast_all(payloads, topology: Topology, counter: WireCounter,
                  declared_length: int, label: str = "broadcast"):
    """Network-wide exchange: node l receives from every other node.

    Adds (L - 1) * L * declared_length scalars to ``counter``.
    """
    if len(payloads) != topology.L:
        raise ValueError("need one payload per node")
    L = topology.L
    inboxes = []
    for l in range(1, L + 1):
        box = {
            j: Message(j, l, payloads[j - 1], declared_length)
            for j in range(1, L + 1)
            if j != l
        }
        inboxes.append(box)
    counter._add("broadcast", label, (L - 1) * L * declared_length)
    return inboxes
