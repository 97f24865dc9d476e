import numpy as np
import pytest

from dcsp.errors import RankDeficientError, TooLargeError
from dcsp.linalg import column_submatrix, resid
from dcsp.network import ring_topology
from dcsp.problems import ProblemConfig, ProblemInstance, generate, success
from dcsp.pursuit import dcsp_run, exhaustive_decoder, ssp_run


def tiny_instance(seed, N=12, M=8, K=2, L=3):
    return generate(ProblemConfig(N=N, M=M, K=K, L=L, seed=seed))


class TestSspRun:
    def test_hand_built_two_column_case(self):
        # K=1, N=2, M=2, L=2; support {1} dominates both correlation votes
        A1 = np.array([[1.0, 0.2], [0.0, 1.0]])
        A2 = np.array([[1.0, -0.3], [0.5, 1.0]])
        x = np.array([2.0, 0.0])
        with pytest.warns(UserWarning):
            cfg = ProblemConfig(N=2, M=2, K=1, L=2, seed=0)
        inst = ProblemInstance(
            cfg, [A1, A2], [x, x], [A1 @ x, A2 @ x], np.array([1], dtype=np.int64)
        )
        result = ssp_run(inst)
        assert result.support.tolist() == [1]
        assert result.iterations == 1

    def test_recovers_generously_sampled_instance(self):
        inst = generate(ProblemConfig(N=60, M=30, K=4, L=4, seed=42))
        result = ssp_run(inst)
        assert success(result.support, inst)

    def test_immediate_fit_stops_at_one_iteration(self):
        # pick a seed where the initialization already selects the truth
        for seed in range(100):
            inst = generate(ProblemConfig(N=40, M=30, K=3, L=4, seed=seed))
            probe = ssp_run(inst)
            if np.array_equal(probe.support_trace[0], inst.true_support):
                assert probe.iterations == 1
                assert np.array_equal(probe.support, probe.support_trace[0])
                assert probe.residual_trace[0] <= 1e-18 * sum(
                    float(y @ y) for y in inst.measurements
                )
                return
        pytest.fail("no seed produced an immediately correct initialization")

    def test_requires_full_collaboration(self):
        inst = tiny_instance(1)
        with pytest.raises(ValueError):
            ssp_run(inst, topology=ring_topology(3, 2))

    def test_rank_deficient_propagates(self):
        cfg = ProblemConfig(N=12, M=8, K=2, L=3, seed=3)
        inst = generate(cfg)
        inst.dictionaries[1][:, :] = 0.0  # force a degenerate projection
        inst.measurements[1] = inst.dictionaries[1] @ inst.signals[1]
        with pytest.raises(RankDeficientError):
            ssp_run(inst)

    def test_trace_is_strictly_decreasing_before_stop(self):
        for seed in range(20):
            result = ssp_run(tiny_instance(seed))
            trace = result.residual_trace
            for a, b in zip(trace[:-2], trace[1:-1]):
                assert b < a
            if not result.hit_max_iters:
                assert trace[-1] >= trace[-2] or len(trace) == 1


class TestDcspRun:
    def test_recovers_with_neighborhood_collaboration(self):
        inst = generate(ProblemConfig(N=60, M=30, K=4, L=6, seed=7))
        result = dcsp_run(inst, ring_topology(6, 3))
        assert success(result.support, inst)

    def test_candidate_sizes_bounded(self):
        K = 3
        for seed in range(15):
            inst = generate(ProblemConfig(N=30, M=16, K=K, L=5, seed=seed))
            result = dcsp_run(inst, ring_topology(5, 3))
            for sizes in result.candidate_sizes:
                assert len(sizes) == 5
                assert all(K <= s <= 2 * K for s in sizes)

    def test_full_collaboration_matches_ssp(self):
        for seed in range(25):
            inst = tiny_instance(seed, N=24, M=14, K=3, L=4)
            a = ssp_run(inst)
            b = dcsp_run(inst, ring_topology(4, 4))
            assert np.array_equal(a.support, b.support)
            assert a.iterations == b.iterations
            assert len(a.support_trace) == len(b.support_trace)
            for sa, sb in zip(a.support_trace, b.support_trace):
                assert np.array_equal(sa, sb)

    def test_local_support_states_are_k_sets(self):
        inst = tiny_instance(11, N=30, M=16, K=3, L=5)
        result = dcsp_run(inst, ring_topology(5, 3))
        assert result.support.size == 3

    def test_deterministic_repeat(self):
        inst = tiny_instance(5)
        topo = ring_topology(3, 2)
        a = dcsp_run(inst, topo)
        b = dcsp_run(inst, topo)
        assert np.array_equal(a.support, b.support)
        assert a.residual_trace == b.residual_trace
        assert a.wire.total == b.wire.total


class TestStoppingRule:
    def test_reported_support_minimizes_trace(self):
        # the revert-on-non-improvement rule means the reported support is
        # the last strictly improving one
        for seed in range(20):
            inst = tiny_instance(seed, N=20, M=10, K=2, L=3)
            result = ssp_run(inst)
            if result.hit_max_iters:
                continue
            best_t = int(np.argmin(result.residual_trace))
            if best_t == len(result.residual_trace) - 1:
                best_t -= 1  # final entry ties the previous one
            assert np.array_equal(result.support, result.support_trace[best_t])

    def test_successful_final_support_fits_exactly(self):
        inst = generate(ProblemConfig(N=60, M=30, K=4, L=4, seed=17))
        result = ssp_run(inst)
        assert success(result.support, inst)
        total = sum(
            float(np.linalg.norm(resid(y, column_submatrix(A, result.support))) ** 2)
            for A, y in zip(inst.dictionaries, inst.measurements)
        )
        energy = sum(float(y @ y) for y in inst.measurements)
        assert total <= 1e-9 * energy


class TestExhaustiveDecoder:
    def test_small_enumeration_counts(self):
        inst = tiny_instance(2, N=5, M=4, K=1, L=2)
        assert exhaustive_decoder(inst).size == 1

    def test_finds_true_support(self):
        for seed in range(10):
            inst = tiny_instance(seed)
            assert np.array_equal(exhaustive_decoder(inst), inst.true_support)

    def test_cap_enforced(self):
        inst = tiny_instance(0, N=40, M=20, K=8, L=2)
        with pytest.raises(TooLargeError):
            exhaustive_decoder(inst, cap=1000)

    def test_agrees_with_dcsp_when_dcsp_succeeds(self):
        agree = 0
        for seed in range(30):
            inst = tiny_instance(seed)
            result = dcsp_run(inst, ring_topology(3, 3))
            if success(result.support, inst):
                assert np.array_equal(result.support, exhaustive_decoder(inst))
                agree += 1
        assert agree > 0


def test_node_state_norm_cache_consistency():
    from dcsp.pursuit import NodeState, _update_residuals

    inst = tiny_instance(9)
    states = [NodeState(l) for l in range(1, 4)]
    _update_residuals(states, inst, inst.true_support)
    for s in states:
        true_norm = float(np.linalg.norm(s.residual) ** 2)
        assert abs(s.residual_sq_norm - true_norm) <= 1e-12 * max(true_norm, 1.0)
