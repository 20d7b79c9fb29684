"""Module detection, candidate costs, and the exact solver."""

from itertools import combinations

import pytest

from arrowsimp import (
    arrow_simplicity,
    arrow_simplicity_brute_force,
    cheap_witnesses,
    congruence_bound,
    cost_lower_bound,
    all_tournaments,
    default_backend,
    global_minima,
    is_module,
    is_simple,
    is_simple_exhaustive,
    minimal_module_closure,
    module_cost,
    paley_tournament,
    random_tournament,
    delete_vertices,
    reverse_arcs,
)
from arrowsimp.errors import (
    BadSizeError,
    SameVertexError,
    TooLargeError,
    TooSmallError,
)
from arrowsimp.modsimp import _scan_native

from conftest import (
    naive_exact_search,
    naive_is_module,
    naive_module_cost,
    random_pool,
    transitive,
)


class TestIsModule:
    def test_transitive_top_pair(self, t3):
        assert is_module(t3, (0, 1))

    def test_cycle_pair(self, c3):
        assert not is_module(c3, (0, 1))

    def test_paley_pair(self, paley7):
        assert not is_module(paley7, (0, 1))

    def test_trivial_sets(self, c3):
        assert is_module(c3, ())
        assert is_module(c3, (1,))
        assert is_module(c3, (0, 1, 2))

    def test_matches_naive(self):
        for label, t in random_pool(12, (5, 6, 7)):
            for size in range(2, t.n):
                for members in combinations(range(t.n), size):
                    assert is_module(t, members) == naive_is_module(t, members), label


class TestClosure:
    def test_already_module(self, t3):
        assert minimal_module_closure(t3, 0, 1) == (0, 1)

    def test_cycle_grows_to_all(self, c3):
        assert minimal_module_closure(c3, 0, 1) == (0, 1, 2)

    def test_paley_all_pairs_full(self, paley7):
        for x in range(7):
            for y in range(x + 1, 7):
                assert minimal_module_closure(paley7, x, y) == tuple(range(7))

    def test_same_vertex(self, c3):
        with pytest.raises(SameVertexError):
            minimal_module_closure(c3, 2, 2)

    def test_closure_is_minimal_module(self):
        # result is a module and contained in every module holding the pair
        for label, t in random_pool(10, (6, 7)):
            for x in range(t.n):
                for y in range(x + 1, t.n):
                    closed = set(minimal_module_closure(t, x, y))
                    assert naive_is_module(t, closed), label
                    for size in range(2, t.n + 1):
                        for members in combinations(range(t.n), size):
                            if {x, y} <= set(members) and naive_is_module(t, members):
                                assert closed <= set(members), label


class TestIsSimple:
    def test_cycle_simple(self, c3):
        assert is_simple(c3)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_transitive_not_simple(self, n):
        assert not is_simple(transitive(n))

    def test_no_simple_4_tournament(self):
        assert not any(is_simple(t) for t in all_tournaments(4))

    def test_closure_agrees_with_exhaustive(self):
        for t in all_tournaments(4):
            assert is_simple(t) == is_simple_exhaustive(t)
        for label, t in random_pool(40, (5, 6)):
            assert is_simple(t) == is_simple_exhaustive(t), label

    def test_too_small(self):
        with pytest.raises(TooSmallError):
            is_simple(random_tournament(2, 0))


class TestModuleCost:
    def test_cycle_pair(self, c3):
        cost, graph = module_cost(c3, (0, 1))
        assert cost == 1 and len(graph.edges) == 1

    def test_transitive_pair_free(self, t3):
        cost, graph = module_cost(t3, (0, 1))
        assert cost == 0 and graph.edges == ()

    def test_paley_out_neighborhood(self, paley7):
        members = (1, 2, 4)  # out-neighbours of 0
        cost, _ = module_cost(paley7, members)
        assert cost == _reversal_oracle_for_set(paley7, members)

    def test_bad_size(self, c3):
        with pytest.raises(BadSizeError):
            module_cost(c3, (0,))
        with pytest.raises(BadSizeError):
            module_cost(c3, (0, 1, 2))

    def test_matches_naive_and_reversal_works(self):
        for label, t in random_pool(12, (5, 6, 7, 8)):
            for size in range(2, t.n):
                for members in combinations(range(t.n), size):
                    cost, graph = module_cost(t, members)
                    assert cost == naive_module_cost(t, members), label
                    arcs = graph.reversal_arcs(t)
                    assert len(arcs) == cost == len(graph.edges)
                    assert is_module(reverse_arcs(t, arcs), members)


def _reversal_oracle_for_set(t, members):
    """Cheapest reversal making ``members`` a module, by enumerating arc
    subsets between the set and its complement in increasing size.
    """
    ms = set(members)
    boundary = [a for a in t.arcs() if (a[0] in ms) != (a[1] in ms)]
    for k in range(len(boundary) + 1):
        for subset in combinations(boundary, k):
            if naive_is_module(reverse_arcs(t, subset), members):
                return k
    raise AssertionError("no reversal found")


class TestLowerBounds:
    def test_paley_cases(self, paley7):
        profile = global_minima(paley7)
        assert cost_lower_bound(paley7, 5, profile) == 3  # degree bound applies
        assert cost_lower_bound(paley7, 3, profile) == 3  # separator bound applies
        assert cost_lower_bound(paley7, 4, profile) == 0  # neither applies

    def test_bad_size(self, paley7):
        profile = global_minima(paley7)
        with pytest.raises(BadSizeError):
            cost_lower_bound(paley7, 1, profile)
        with pytest.raises(BadSizeError):
            cost_lower_bound(paley7, 7, profile)

    def test_bounds_are_admissible(self):
        # no candidate of the given size may cost less than the bound
        for label, t in random_pool(10, (6, 7)):
            profile = global_minima(t)
            for size in range(2, t.n):
                bound = cost_lower_bound(t, size, profile)
                for members in combinations(range(t.n), size):
                    assert naive_module_cost(t, members) >= bound, label


class TestCongruenceBound:
    @pytest.mark.parametrize("n,want", [(3, 1), (4, 0), (5, 1), (6, 2),
                                        (7, 3), (8, 2), (9, 3), (10, 4), (11, 5)])
    def test_values(self, n, want):
        assert congruence_bound(n) == want

    def test_too_small(self):
        with pytest.raises(TooSmallError):
            congruence_bound(2)


class TestCheapWitnesses:
    def test_cycle(self, c3):
        (x, v_arcs), (pair, p_arcs) = cheap_witnesses(c3)
        assert len(v_arcs) == 1 and len(p_arcs) == 1

    def test_paley(self, paley7):
        (x, v_arcs), (pair, p_arcs) = cheap_witnesses(paley7)
        assert len(v_arcs) == 3 and len(p_arcs) == 3

    def test_transitive_free_vertex(self):
        (x, v_arcs), _ = cheap_witnesses(transitive(4))
        assert v_arcs == ()

    def test_sizes_match_minima(self):
        for label, t in random_pool(25, (5, 8, 11)):
            profile = global_minima(t)
            (x, v_arcs), (pair, p_arcs) = cheap_witnesses(t)
            assert len(v_arcs) == profile.min_degree, label
            assert len(p_arcs) == profile.min_separators, label


class TestArrowSimplicity:
    def test_transitive_is_zero(self):
        rep = arrow_simplicity(transitive(5))
        assert rep.s == 0 and rep.witness_arcs == ()
        assert is_module(transitive(5), rep.witness_module)
        assert 2 <= len(rep.witness_module) <= 4

    def test_paley7_is_maximal(self, paley7):
        rep = arrow_simplicity(paley7)
        assert rep.s == 3 == (7 - 1) // 2

    def test_paley11_minus_three(self, paley11):
        rep = arrow_simplicity(delete_vertices(paley11, (0, 1, 2)))
        assert rep.s == 2

    def test_size_errors(self):
        with pytest.raises(TooSmallError):
            arrow_simplicity(random_tournament(2, 0))
        with pytest.raises(TooLargeError):
            arrow_simplicity(random_tournament(25, 0))

    def test_report_bounds_and_witness(self):
        for label, t in random_pool(30, (5, 6, 7, 8, 9, 10)):
            rep = arrow_simplicity(t)
            assert rep.s <= min(rep.min_degree, rep.min_separators), label
            assert rep.s <= rep.congruence_bound, label
            assert len(rep.witness_arcs) == rep.s, label
            assert is_module(reverse_arcs(t, rep.witness_arcs),
                             rep.witness_module), label

    def test_matches_naive_tiebreak(self):
        # the witness is the first optimum in (size, lex) order
        for label, t in random_pool(15, (5, 6, 7)):
            rep = arrow_simplicity(t)
            cost, members = naive_exact_search(t)
            assert rep.s == cost, label
            if rep.s > 0:
                assert rep.witness_module == members, label

    def test_pruning_invariance(self):
        for label, t in random_pool(100, (5, 6, 7, 8, 9, 10)):
            fast = arrow_simplicity(t, prune=True)
            slow = arrow_simplicity(t, prune=False)
            assert fast.s == slow.s, label
            assert fast.witness_module == slow.witness_module, label
            assert slow.subsets_pruned == 0

    def test_worker_invariance(self):
        for label, t in random_pool(6, (9, 10, 11)):
            serial = arrow_simplicity(t)
            parallel = arrow_simplicity(t, workers=2)
            assert serial == parallel, label

    @pytest.mark.skipif(_scan_native is None, reason="compiled kernel not built")
    def test_backend_parity(self):
        assert default_backend() == "native"
        for label, t in random_pool(20, (5, 7, 9, 11)):
            native = arrow_simplicity(t, backend="native")
            pure = arrow_simplicity(t, backend="python")
            assert native == pure, label


class TestBruteForceOracle:
    def test_cycle(self, c3):
        assert arrow_simplicity_brute_force(c3) == 1

    def test_transitive(self):
        assert arrow_simplicity_brute_force(transitive(4)) == 0

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            arrow_simplicity_brute_force(random_tournament(6, 0))

    def test_solver_agrees_on_small_samples(self):
        for label, t in random_pool(40, (4, 5)):
            assert arrow_simplicity(t).s == arrow_simplicity_brute_force(t), label
