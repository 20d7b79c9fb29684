"""Data model, statistics, and editing operations."""

import pytest
from hypothesis import given, settings, strategies as st

from arrowsimp import (
    NEAR_REGULAR,
    NEITHER,
    REGULAR,
    delete_vertices,
    from_matrix,
    global_minima,
    neighborhoods,
    pair_stats,
    paley_tournament,
    random_tournament,
    regularity_class,
    reverse_arcs,
)
from arrowsimp.errors import (
    ArcAbsentError,
    DeletesEverythingError,
    DiagonalSetError,
    NotAntisymmetricError,
    NotSquareError,
    SameVertexError,
    TooSmallError,
    VertexOutOfRangeError,
)

from conftest import naive_pair_counts, transitive

F, T = False, True

tournaments = st.builds(
    random_tournament,
    st.integers(min_value=3, max_value=14),
    st.integers(min_value=0, max_value=2**32),
)


class TestFromMatrix:
    def test_smallest(self):
        t = from_matrix([[F, T], [F, F]])
        assert t.n == 2 and t.beats(0, 1) and not t.beats(1, 0)

    def test_three_cycle(self):
        t = from_matrix([[F, T, F], [F, F, T], [T, F, F]])
        assert sorted(t.arcs()) == [(0, 1), (1, 2), (2, 0)]

    def test_both_orientations(self):
        with pytest.raises(NotAntisymmetricError):
            from_matrix([[F, T], [T, F]])

    def test_missing_orientation(self):
        with pytest.raises(NotAntisymmetricError):
            from_matrix([[F, F], [F, F]])

    def test_diagonal(self):
        with pytest.raises(DiagonalSetError):
            from_matrix([[T, T], [F, F]])

    def test_not_square(self):
        with pytest.raises(NotSquareError):
            from_matrix([[F, T]])
        with pytest.raises(NotSquareError):
            from_matrix([])


class TestNeighborhoods:
    def test_cycle(self, c3):
        assert neighborhoods(c3, 0) == ((1,), (2,))

    def test_transitive_source(self, t3):
        assert neighborhoods(t3, 0) == ((1, 2), ())

    def test_paley_residues(self, paley7):
        # nonzero quadratic residues mod 7, computed independently
        residues = tuple(sorted({i * i % 7 for i in range(1, 7)}))
        assert neighborhoods(paley7, 0)[0] == residues == (1, 2, 4)

    def test_out_of_range(self, c3):
        with pytest.raises(VertexOutOfRangeError):
            neighborhoods(c3, 3)


class TestPairStats:
    def test_cycle(self, c3):
        st_ = pair_stats(c3, 0, 1)
        assert (st_.out_pair, st_.in_pair, st_.separators) == (0, 0, 1)

    def test_paley_arc_profile(self, paley7):
        # doubly regular with k=1: every arc sees (1, 1, 1, 2)
        for x, y in paley7.arcs():
            st_ = pair_stats(paley7, x, y)
            assert (st_.out_pair, st_.in_pair, st_.out_in, st_.in_out) == (1, 1, 1, 2)
            assert st_.separators == 3

    def test_transitive_gap(self, t3):
        st_ = pair_stats(t3, 0, 2)
        assert (st_.out_pair, st_.in_pair, st_.separators) == (0, 0, 1)

    def test_errors(self, c3):
        with pytest.raises(SameVertexError):
            pair_stats(c3, 1, 1)
        with pytest.raises(VertexOutOfRangeError):
            pair_stats(c3, 0, 5)

    @settings(max_examples=40)
    @given(tournaments)
    def test_matches_naive_sets(self, t):
        for x in range(t.n):
            for y in range(t.n):
                if x == y:
                    continue
                st_ = pair_stats(t, x, y)
                got = (st_.out_pair, st_.in_pair, st_.out_in, st_.in_out)
                assert got == naive_pair_counts(t, x, y)

    @settings(max_examples=40)
    @given(tournaments)
    def test_pair_partition(self, t):
        for x in range(t.n):
            for y in range(x + 1, t.n):
                st_ = pair_stats(t, x, y)
                assert st_.separators + st_.in_pair + st_.out_pair == t.n - 2
                assert st_.separators == st_.out_in + st_.in_out

    @settings(max_examples=40)
    @given(tournaments)
    def test_pair_degree_difference(self, t):
        outs = [r.bit_count() for r in t.out_rows]
        ins = [r.bit_count() for r in t.in_rows]
        for x in range(t.n):
            for y in range(t.n):
                if x != y:
                    st_ = pair_stats(t, x, y)
                    assert st_.in_pair - st_.out_pair == ins[x] - outs[y]

    def test_regular_pair_balance(self):
        for q in (3, 7, 11):
            t = paley_tournament(q)
            for x, y in t.arcs():
                st_ = pair_stats(t, x, y)
                assert st_.in_pair == st_.out_pair


class TestGlobalMinima:
    def test_cycle(self, c3):
        p = global_minima(c3)
        assert (p.min_out, p.min_in, p.min_degree, p.min_separators) == (1, 1, 1, 1)

    def test_paley(self, paley7):
        p = global_minima(paley7)
        assert p.min_degree == 3 and p.min_separators == 3
        # brute force over all 21 pairs with naive sets
        naive = min(naive_pair_counts(paley7, x, y)[2] + naive_pair_counts(paley7, x, y)[3]
                    for x in range(7) for y in range(x + 1, 7))
        assert naive == 3

    def test_transitive_has_source(self):
        assert global_minima(transitive(5)).min_degree == 0

    def test_too_small(self):
        with pytest.raises(TooSmallError):
            global_minima(from_matrix([[F, T], [F, F]]))

    @settings(max_examples=30)
    @given(tournaments)
    def test_caps(self, t):
        p = global_minima(t)
        assert p.min_degree <= (t.n - 1) // 2
        assert p.min_separators <= (t.n - 1) // 2


class TestReverseArcs:
    def test_empty_is_identity(self, c3):
        assert reverse_arcs(c3, []) == c3

    def test_cycle_single_arc(self, c3):
        r = reverse_arcs(c3, [(0, 1)])
        assert sorted(r.arcs()) == [(1, 0), (1, 2), (2, 0)]

    def test_sink_paley(self, paley7):
        arcs = [(0, y) for y in neighborhoods(paley7, 0)[0]]
        r = reverse_arcs(paley7, arcs)
        assert r.out_rows[0] == 0

    def test_absent_arc(self, c3):
        with pytest.raises(ArcAbsentError):
            reverse_arcs(c3, [(1, 0)])

    @settings(max_examples=40)
    @given(tournaments, st.randoms(use_true_random=False))
    def test_involution(self, t, rng):
        arcs = [a for a in t.arcs() if rng.random() < 0.4]
        flipped = [(y, x) for x, y in arcs]
        assert reverse_arcs(reverse_arcs(t, arcs), flipped) == t


class TestDeleteVertices:
    def test_paley_minus_vertex_near_regular(self, paley7):
        assert regularity_class(delete_vertices(paley7, (0,))).kind == NEAR_REGULAR

    def test_cycle_minus_vertex(self, c3):
        assert sorted(delete_vertices(c3, (2,)).arcs()) == [(0, 1)]

    def test_empty_deletion(self, paley7):
        assert delete_vertices(paley7, ()) == paley7

    def test_delete_everything(self, c3):
        with pytest.raises(DeletesEverythingError):
            delete_vertices(c3, (0, 1, 2))

    @settings(max_examples=40)
    @given(tournaments, st.data())
    def test_preserves_orientation(self, t, data):
        drop = data.draw(st.sets(st.integers(0, t.n - 1), max_size=t.n - 1))
        keep = [v for v in range(t.n) if v not in drop]
        r = delete_vertices(t, drop)
        for i, x in enumerate(keep):
            for j, y in enumerate(keep):
                if i != j:
                    assert r.beats(i, j) == t.beats(x, y)


class TestRegularityClass:
    def test_paley_regular(self, paley7):
        assert regularity_class(paley7).kind == REGULAR

    def test_deleted_vertex_split(self, paley7):
        r = regularity_class(delete_vertices(paley7, (0,)))
        assert r.kind == NEAR_REGULAR
        assert len(r.low_class) == len(r.high_class) == 3
        outs = [row.bit_count() for row in delete_vertices(paley7, (0,)).out_rows]
        assert all(outs[v] == 2 for v in r.low_class)
        assert all(outs[v] == 3 for v in r.high_class)

    def test_transitive_neither(self):
        assert regularity_class(transitive(4)).kind == NEITHER

    def test_too_small(self):
        with pytest.raises(TooSmallError):
            regularity_class(from_matrix([[F]]))
