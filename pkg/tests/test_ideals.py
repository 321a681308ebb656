"""Monomial-ideal arithmetic: expansion, colon, radical, polarization."""

import itertools
import json

import pytest

from coverdepth import (
    IN_IDEAL,
    InvalidParameterError,
    MonomialIdeal,
    SizeLimitError,
    SymbolicCoverIdeal,
    colon_by_monomial,
    colon_radical_subgraph,
    contains,
    cover_ideal,
    edge_ideal,
    expand_generators,
    make_cycle,
    make_path,
    polarize,
    radical,
    symbolic_cover_power,
)
from coverdepth.config import Budgets
from coverdepth.ideals import prime_power_generators


def assert_minimal(ideal: MonomialIdeal):
    for i, g in enumerate(ideal.gens):
        for j, h in enumerate(ideal.gens):
            if i != j:
                assert not all(x <= y for x, y in zip(h, g)), (h, g)


class TestSymbolicCoverPower:
    def test_triangle(self):
        sci = symbolic_cover_power(make_cycle(3), 1)
        assert sci.components == (((1, 2), 1), ((2, 3), 1), ((1, 3), 1))

    def test_c4_squared(self):
        sci = symbolic_cover_power(make_cycle(4), 2)
        assert len(sci.components) == 4
        assert all(power == 2 for _, power in sci.components)

    def test_edgeless(self):
        with pytest.raises(InvalidParameterError):
            symbolic_cover_power(make_path(1), 2)


class TestColonRadicalSubgraph:
    def test_c4_example(self):
        # edge sums against (0,1,2,2): 1, 3, 4, 2 -> only e_1 stays below 2
        assert colon_radical_subgraph(make_cycle(4), 2, (0, 1, 2, 2)) == (1,)

    def test_zero_vector_gives_everything(self):
        g = make_cycle(5)
        assert colon_radical_subgraph(g, 3, (0,) * 5) == (1, 2, 3, 4, 5)

    def test_membership_marker(self):
        assert colon_radical_subgraph(make_cycle(3), 2, (2, 2, 2)) is IN_IDEAL

    def test_length_mismatch(self):
        with pytest.raises(InvalidParameterError):
            colon_radical_subgraph(make_cycle(3), 2, (1, 1))


class TestExpansion:
    def test_triangle_cover_ideal(self):
        ideal = expand_generators(symbolic_cover_power(make_cycle(3), 1))
        assert ideal.gens == ((0, 1, 1), (1, 0, 1), (1, 1, 0))

    def test_prime_square(self):
        sci = SymbolicCoverIdeal(nvars=2, power=2, supports=((1, 2),))
        ideal = expand_generators(sci)
        assert ideal.gens == ((0, 2), (1, 1), (2, 0))

    def test_c4_squared_degree_property(self):
        ideal = expand_generators(symbolic_cover_power(make_cycle(4), 2))
        for g in ideal.gens:
            for u, v in make_cycle(4).edges:
                assert g[u - 1] + g[v - 1] >= 2, g
        assert_minimal(ideal)

    def test_guards(self):
        with pytest.raises(SizeLimitError):
            expand_generators(symbolic_cover_power(make_cycle(9), 1))
        with pytest.raises(SizeLimitError):
            expand_generators(symbolic_cover_power(make_cycle(3), 4))


class TestColonAndRadical:
    def test_colon_example(self):
        ideal = MonomialIdeal(2, ((2, 0), (1, 1), (0, 2)))
        assert colon_by_monomial(ideal, (1, 0)).gens == ((0, 1), (1, 0))

    def test_colon_by_one(self):
        ideal = expand_generators(symbolic_cover_power(make_cycle(3), 2))
        assert colon_by_monomial(ideal, (0, 0, 0)) == ideal

    def test_colon_to_unit(self):
        ideal = MonomialIdeal(2, ((1, 1),))
        result = colon_by_monomial(ideal, (1, 1))
        assert result.is_unit

    def test_radical(self):
        assert radical(MonomialIdeal(2, ((2, 0), (0, 3)))).gens == ((0, 1), (1, 0))
        assert radical(MonomialIdeal(2, ((2, 1),))).gens == ((1, 1),)

    def test_radical_idempotent_on_squarefree(self):
        ideal = expand_generators(symbolic_cover_power(make_cycle(4), 1))
        assert radical(ideal) == ideal


class TestContains:
    def test_generator_is_member(self):
        ideal = expand_generators(symbolic_cover_power(make_cycle(3), 1))
        assert contains(ideal, (1, 1, 0))

    def test_nonmember(self):
        assert not contains(MonomialIdeal(2, ((1, 1),)), (1, 0))

    @pytest.mark.parametrize("t", (1, 2))
    def test_membership_matches_colon_marker(self, t):
        g = make_cycle(4)
        sci = symbolic_cover_power(g, t)
        for a in itertools.product(range(t + 1), repeat=4):
            marker = colon_radical_subgraph(g, t, a) is IN_IDEAL
            assert contains(sci, a) == marker

    @pytest.mark.parametrize("graph,t", [(make_cycle(3), 2), (make_cycle(4), 1), (make_path(4), 2)])
    def test_expanded_membership_consistent(self, graph, t):
        sci = symbolic_cover_power(graph, t)
        expanded = expand_generators(sci)
        for a in itertools.product(range(t + 1), repeat=graph.n):
            assert contains(expanded, a) == contains(sci, a)


class TestPrimePowerColon:
    """(P^t : x^a) stays a prime power with exponent max(0, t - sum on P)."""

    @pytest.mark.parametrize("support", [(1, 2), (1, 2, 3)])
    @pytest.mark.parametrize("t", (1, 2, 3))
    def test_against_generator_level(self, support, t):
        nvars = 3
        power = MonomialIdeal(nvars, prime_power_generators(nvars, support, t))
        for a in itertools.product(range(t + 1), repeat=nvars):
            drop = sum(a[v - 1] for v in support)
            expected_t = max(0, t - drop)
            if expected_t == 0:
                expected = MonomialIdeal(nvars, ((0,) * nvars,))
            else:
                expected = MonomialIdeal(
                    nvars, prime_power_generators(nvars, support, expected_t)
                )
            assert colon_by_monomial(power, a) == expected


class TestColonRadicalIdentity:
    """Generator-level radical-of-colon equals the fast-path cover ideal."""

    @pytest.mark.parametrize(
        "graph,tmax",
        [
            (make_cycle(3), 3),
            (make_cycle(4), 3),
            (make_cycle(5), 3),
            (make_path(4), 3),
        ],
    )
    def test_two_routes_agree(self, graph, tmax):
        for t in range(1, tmax + 1):
            expanded = expand_generators(symbolic_cover_power(graph, t))
            unit = MonomialIdeal(graph.n, ((0,) * graph.n,))
            for a in itertools.product(range(t + 1), repeat=graph.n):
                slow = radical(colon_by_monomial(expanded, a))
                fast = colon_radical_subgraph(graph, t, a)
                if fast is IN_IDEAL:
                    assert slow == unit
                else:
                    supports = [graph.edges[i - 1] for i in fast]
                    assert slow == cover_ideal(graph.n, supports)
                assert_minimal(slow)


class TestPolarize:
    def test_single_square(self):
        ideal = MonomialIdeal(1, ((2,),))
        squarefree, total, varmap = polarize(ideal)
        assert squarefree.gens == ((1, 1),)
        assert total == 2
        assert varmap == ((1, 1), (1, 2))

    def test_squarefree_fixed_point(self):
        ideal = edge_ideal(make_path(4))
        squarefree, total, varmap = polarize(ideal)
        assert squarefree == ideal
        assert total == 4
        assert varmap == ((1, 1), (2, 1), (3, 1), (4, 1))

    def test_mixed(self):
        ideal = MonomialIdeal(2, ((2, 0), (1, 1)))
        squarefree, total, varmap = polarize(ideal)
        assert total == 3
        assert squarefree.gens == ((1, 0, 1), (1, 1, 0))
        assert varmap == ((1, 1), (1, 2), (2, 1))

    def test_unused_variable_survives(self):
        ideal = MonomialIdeal(3, ((2, 0, 0),))
        _, total, varmap = polarize(ideal)
        assert total == 4
        assert varmap == ((1, 1), (1, 2), (2, 1), (3, 1))

    def test_zero_rejected(self):
        with pytest.raises(InvalidParameterError):
            polarize(MonomialIdeal(2, ()))


class TestSerialization:
    def test_lexicographic_order(self):
        ideal = MonomialIdeal(2, ((0, 2), (2, 0), (1, 1)))
        assert ideal.gens == ((0, 2), (1, 1), (2, 0))

    def test_json_round_trip(self):
        ideal = expand_generators(symbolic_cover_power(make_cycle(4), 2))
        data = json.loads(json.dumps(ideal.to_json_dict()))
        assert MonomialIdeal.from_json_dict(data) == ideal

    def test_byte_stable(self):
        a = expand_generators(symbolic_cover_power(make_cycle(5), 2))
        b = expand_generators(symbolic_cover_power(make_cycle(5), 2))
        assert json.dumps(a.to_json_dict()) == json.dumps(b.to_json_dict())


class TestGeneratorCap:
    def test_intersection_cap(self):
        tight = Budgets(expand_generators=3)
        with pytest.raises(SizeLimitError):
            expand_generators(symbolic_cover_power(make_cycle(4), 2), budgets=tight)
