"""Backend parity: the compiled kernels must match the pure ones exactly."""

import itertools

import pytest

from coverdepth import _kernels, make_cycle
from coverdepth._kernels import available_backends, pure

backends = available_backends()
needs_compiled = pytest.mark.skipif(
    "compiled" not in backends, reason="compiled kernels not built"
)


def edge_vmasks(graph):
    return [sum(1 << (v - 1) for v in e) for e in graph.edges]


class TestPureKernels:
    def test_cycle_masks_ascending_and_proper(self):
        masks = pure.cycle_admissible_masks(5, 2, 1, (1 << 5) - 1)
        assert masks == sorted(masks)
        assert all(0 < m < (1 << 5) - 1 for m in masks)

    def test_box_masks_sorted(self):
        vmasks = edge_vmasks(make_cycle(4))
        masks = pure.box_admissible_masks(vmasks, 4, 2)
        assert masks == sorted(masks)
        assert 0 not in masks

    def test_box_shards_union(self):
        vmasks = edge_vmasks(make_cycle(5))
        whole = set(pure.box_admissible_masks(vmasks, 5, 2))
        sharded = set()
        for c in range(3):
            sharded.update(pure.box_admissible_masks(vmasks, 5, 2, fixed_last=c))
        assert sharded == whole

    def test_witness_is_first_in_odometer_order(self):
        vmasks = edge_vmasks(make_cycle(4))
        witness = pure.box_find_witness(vmasks, 4, 2, 0b0001)
        # first hit with coordinate 1 varying fastest; check it classifies
        assert witness == (1, 0, 2, 1)
        sums = [witness[0] + witness[1], witness[1] + witness[2],
                witness[2] + witness[3], witness[0] + witness[3]]
        assert [s < 2 for s in sums] == [True, False, False, False]

    def test_witness_none_for_infeasible(self):
        vmasks = edge_vmasks(make_cycle(4))
        assert pure.box_find_witness(vmasks, 4, 2, 0b0101) is None


@needs_compiled
class TestBackendParity:
    @pytest.mark.parametrize("n", range(3, 11))
    @pytest.mark.parametrize("t", range(1, 4))
    def test_cycle_masks_equal(self, n, t):
        stop = (1 << n) - 1
        compiled = backends["compiled"].cycle_admissible_masks(n, t, 1, stop)
        assert compiled == pure.cycle_admissible_masks(n, t, 1, stop)

    @pytest.mark.parametrize("n", range(3, 7))
    @pytest.mark.parametrize("t", range(1, 4))
    def test_box_masks_equal(self, n, t):
        vmasks = edge_vmasks(make_cycle(n))
        assert backends["compiled"].box_admissible_masks(
            vmasks, n, t
        ) == pure.box_admissible_masks(vmasks, n, t)

    @pytest.mark.parametrize("fixed", range(-1, 3))
    def test_box_shards_equal(self, fixed):
        vmasks = edge_vmasks(make_cycle(5))
        assert backends["compiled"].box_admissible_masks(
            vmasks, 5, 2, fixed
        ) == pure.box_admissible_masks(vmasks, 5, 2, fixed)

    def test_witness_equal(self):
        vmasks = edge_vmasks(make_cycle(6))
        for size in (1, 2, 3):
            for combo in itertools.combinations(range(6), size):
                target = sum(1 << i for i in combo)
                assert backends["compiled"].box_find_witness(
                    vmasks, 6, 2, target
                ) == pure.box_find_witness(vmasks, 6, 2, target)

    def test_partial_ranges_stitch(self):
        n, t = 8, 2
        stop = (1 << n) - 1
        whole = backends["compiled"].cycle_admissible_masks(n, t, 1, stop)
        parts = []
        for lo in range(1, stop, 37):
            parts.extend(
                backends["compiled"].cycle_admissible_masks(n, t, lo, min(lo + 37, stop))
            )
        assert parts == whole


class TestDispatcher:
    def test_routing_matches_pure(self):
        # whatever backend is active, the dispatcher output equals pure output
        assert _kernels.cycle_admissible_masks(7, 2, 1, 127) == pure.cycle_admissible_masks(
            7, 2, 1, 127
        )
        vmasks = edge_vmasks(make_cycle(5))
        assert _kernels.box_admissible_masks(vmasks, 5, 2) == pure.box_admissible_masks(
            vmasks, 5, 2
        )

    def test_backend_name_exposed(self):
        assert _kernels.BACKEND in ("pure", "compiled")
