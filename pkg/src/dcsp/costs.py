"""Closed-form communication-cost formulas.

Costs count transmitted scalars under pairwise accounting (each recipient
charged separately) with fixed message frames: N for correlation vectors,
2K for projection coefficients, K for support sets, 1 for residual
energies.  On ring topologies these expressions agree with the simulator's
wire counter to the integer, once T is set to the run's executed iteration
count.
"""

from dataclasses import dataclass

ALGORITHMS = ("jsp_jomp", "somp", "dcomp", "ssp", "dcsp")


@dataclass(frozen=True)
class CostParams:
    """Inputs to the cost formulas; ``g``/``T`` only where the row uses them."""

    N: int
    K: int
    L: int
    g: int = None
    T: int = None

    def __post_init__(self):
        for name in ("N", "K", "L"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.g is not None and not 1 <= self.g <= self.L:
            raise ValueError("need 1 <= g <= L")
        if self.T is not None and self.T < 0:
            raise ValueError("T must be >= 0")

    def require(self, *names):
        for name in names:
            if getattr(self, name) is None:
                raise ValueError(f"this cost formula needs {name}")


def cost_ssp(p: CostParams) -> int:
    """[N + T(N + 2K + 1)](L-1)L — fully collaborative subspace pursuit."""
    p.require("T")
    return (p.N + p.T * (p.N + 2 * p.K + 1)) * (p.L - 1) * p.L


def cost_dcsp(p: CostParams) -> int:
    """Symmetric-network DCSP cost.

    N L(g-1) + K(L-1)L + T L[(g-1)(N + 2K) + (K+1)(L-1)]: neighborhood
    correlation and projection exchanges plus network-wide support and
    residual-energy rounds.
    """
    p.require("g", "T")
    return cost_dcsp_general(p.N, p.K, p.L, p.T, p.L * (p.g - 1))


def cost_dcsp_general(N, K, L, T, neighbor_link_count) -> int:
    """DCSP cost on an arbitrary topology with the given sum of (|G_l| - 1)."""
    init = N * neighbor_link_count + K * (L - 1) * L
    per_iter = (N + 2 * K) * neighbor_link_count + (K + 1) * (L - 1) * L
    return init + T * per_iter


def cost_table1(algorithm: str, p: CostParams) -> int:
    """Transmitted-message count for any of the five compared algorithms.

    ``jsp_jomp`` and ``somp`` are T-free; ``dcomp`` needs g and T; ``ssp``
    and ``dcsp`` defer to their dedicated formulas.
    """
    key = algorithm.lower()
    if key == "jsp_jomp":
        return p.K * (p.L - 1) * p.L
    if key == "somp":
        return p.K * p.N * (p.L - 1) * p.L
    if key == "dcomp":
        p.require("g", "T")
        return p.T * ((p.g - 1) * p.N * p.L + (p.L - 1) * p.L)
    if key == "ssp":
        return cost_ssp(p)
    if key == "dcsp":
        return cost_dcsp(p)
    raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
