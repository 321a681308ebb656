"""Acceptance suite: the eight exit criteria, each printed as one line.

Every check is exact (zero tolerance). Run with ``pytest -s`` to see the
per-criterion lines and timings.
"""

import io
import itertools
import time
from contextlib import redirect_stdout

from coverdepth import (
    IN_IDEAL,
    closed_form_depth_cycle,
    colon_by_monomial,
    colon_radical_subgraph,
    cover_ideal,
    depth_symbolic,
    depth_via_polarization,
    edge_ideal,
    enumerate_admissible_bruteforce,
    enumerate_admissible_cycle,
    expand_generators,
    induced_matching_number,
    make_cycle,
    make_path,
    nu_path_closed_form,
    ordinary_power_depth_cycle,
    radical,
    reg_cycle,
    reg_forest,
    reg_pd_hochster,
    symbolic_cover_power,
)
from coverdepth.admissible import (
    box_low_masks,
    build_ones_configuration,
    is_admissible,
    is_realizable,
    reduce_block_2or3,
    reduce_block_ge4,
    witness_classifies,
)
from coverdepth.cli import main as cli_main
from coverdepth.config import current_budgets
from coverdepth.graphs import block_gap_decomposition
from coverdepth.ideals import MonomialIdeal

from test_graphs import brute_force_nu
from test_homology import random_forest


def _report(number: int, label: str, cases: int, started: float) -> None:
    elapsed = time.perf_counter() - started
    print(f"[acceptance] criterion {number} ({label}): PASS ({cases} cases, {elapsed:.1f}s)")


def test_criterion_1_theorem_main():
    started = time.perf_counter()
    mismatches = []
    for n in range(3, 15):
        for t in range(2, 5):
            engine = depth_symbolic(make_cycle(n), t, "certificate").depth
            formula = closed_form_depth_cycle(n, t)
            if engine != formula:
                mismatches.append((n, t, engine, formula))
    assert not mismatches, mismatches
    assert time.perf_counter() - started < 60
    _report(1, "theorem main, certificate engine vs closed form", 36, started)


def test_criterion_2_engine_equivalence():
    started = time.perf_counter()
    cases = 0
    for n in range(3, 9):
        for t in range(1, 4):
            certificate = enumerate_admissible_cycle(n, t)
            brute = enumerate_admissible_bruteforce(make_cycle(n), t)
            assert certificate.members == brute.members, (n, t)
            cases += 1
    assert len(enumerate_admissible_cycle(4, 2)) == 13
    assert time.perf_counter() - started < 120
    _report(2, "certificate vs exponent-box families", cases, started)


def test_criterion_3_colon_radical_identity():
    started = time.perf_counter()
    cases = 0
    for graph in (make_cycle(3), make_cycle(4), make_path(4)):
        for t in (1, 2):
            expanded = expand_generators(symbolic_cover_power(graph, t))
            unit = MonomialIdeal(graph.n, ((0,) * graph.n,))
            for a in itertools.product(range(t + 1), repeat=graph.n):
                slow = radical(colon_by_monomial(expanded, a))
                fast = colon_radical_subgraph(graph, t, a)
                if fast is IN_IDEAL:
                    assert slow == unit, (graph.n, t, a)
                else:
                    supports = [graph.edges[i - 1] for i in fast]
                    assert slow == cover_ideal(graph.n, supports), (graph.n, t, a)
                cases += 1
    assert time.perf_counter() - started < 120
    _report(3, "generator-level colon radical vs edge-sum fast path", cases, started)


def test_criterion_4_regularity_formulas():
    started = time.perf_counter()
    cases = 0
    for n in range(3, 11):
        assert reg_pd_hochster(edge_ideal(make_cycle(n)))[0] == reg_cycle(n), n
        cases += 1
    import random

    rng = random.Random(20260810)
    sampled = 0
    while sampled < 200:
        g = random_forest(rng, rng.randint(2, 9))
        if not g.edges:
            continue
        sampled += 1
        assert reg_pd_hochster(edge_ideal(g))[0] == reg_forest(g), g
        cases += 1
    assert time.perf_counter() - started < 600
    _report(4, "regularity formulas vs homology oracle", cases, started)


def test_criterion_5_depth_oracle():
    started = time.perf_counter()
    cases = 0
    for n, t in ((3, 2), (4, 2), (5, 2), (3, 3)):
        ideal = expand_generators(symbolic_cover_power(make_cycle(n), t))
        assert depth_via_polarization(ideal) == closed_form_depth_cycle(n, t), (n, t)
        cases += 1
    for n in (3, 4, 5):
        ideal = expand_generators(symbolic_cover_power(make_cycle(n), 1))
        assert depth_via_polarization(ideal) == n - reg_cycle(n), n
        cases += 1
    assert time.perf_counter() - started < 600
    _report(5, "polarization depth oracle", cases, started)


def test_criterion_6_lemma_suite():
    started = time.perf_counter()
    cases = 0

    # induced matching number of paths: formula vs brute force
    for n in range(1, 16):
        g = make_path(n)
        value = nu_path_closed_form(n)
        assert value == induced_matching_number(g) == brute_force_nu(g), n
        cases += 1

    # floor inequality over the full stated grid
    for n in range(3, 1001):
        for t in range(2, 51):
            assert (n + 1) // 3 <= (t * n) // (2 * t + 1), (n, t)
    cases += 998 * 49

    # block reductions preserve realizability on every realizable sequence
    for n in range(3, 13):
        for t in range(1, 4):
            family = enumerate_admissible_cycle(n, t)
            realizable = {
                block_gap_decomposition(n, member).blocks
                for member in family.members
                if len(member) < n
            }
            for blocks in sorted(realizable):
                for i, size in enumerate(blocks, start=1):
                    if size >= 4:
                        assert is_realizable(n, t, reduce_block_ge4(blocks, i)), (n, t, blocks, i)
                        cases += 1
                    elif size >= 2:
                        assert is_realizable(n, t, reduce_block_2or3(blocks, i)), (n, t, blocks, i)
                        cases += 1

    # extremal all-singleton configuration: block count and admissibility
    for n in range(3, 21):
        for t in range(1, 6):
            edges, cert = build_ones_configuration(n, t)
            assert len(edges) == (t * n) // (2 * t + 1), (n, t)
            g = make_cycle(n)
            witness = is_admissible(g, t, edges)
            assert witness is not None and witness_classifies(g, t, edges, witness), (n, t)
            cases += 1

    # chains of t+1 alternating edges are never admissible: certificate
    # engine everywhere, exponent box wherever it fits the budget
    budget = current_budgets().box_evaluations
    for t in range(1, 6):
        for n in range(2 * t + 2, 13):
            chain = tuple(range(1, 2 * t + 2, 2))
            g = make_cycle(n)
            assert is_admissible(g, t, chain) is None, (n, t)
            cases += 1
            if n == 2 * t + 2 and (t + 1) ** n <= budget:
                target = sum(1 << (i - 1) for i in chain)
                assert target not in set(box_low_masks(g, t)), (n, t)
                cases += 1

    _report(6, "lemma suite", cases, started)


def test_criterion_7_ordinary_power_remark():
    started = time.perf_counter()
    cases = 0
    for n in range(3, 15):
        for t in range(2, 5):
            value = ordinary_power_depth_cycle(n, t)
            if n % 2 == 1:
                assert value == 0, (n, t)
            else:
                assert value == closed_form_depth_cycle(n, t), (n, t)
            cases += 1
    _report(7, "ordinary-power depth for cycles", cases, started)


def test_criterion_8_determinism():
    started = time.perf_counter()
    outputs = []
    for parallelism in ("1", "8"):
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            code = cli_main(
                [
                    "verify",
                    "theorem-main",
                    "--n",
                    "3..14",
                    "--t",
                    "2..4",
                    "--format",
                    "json",
                    "--parallelism",
                    parallelism,
                ]
            )
        assert code == 0
        outputs.append(buffer.getvalue().encode())
    assert outputs[0] == outputs[1]
    _report(8, "byte-identical reports at parallelism 1 and 8", 2, started)
