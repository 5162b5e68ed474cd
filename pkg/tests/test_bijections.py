import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nuschroder.bijections import (
    forest_to_tree,
    highpeaks_to_valleys,
    hroot,
    large_to_small,
    left_flush,
    left_flush_points,
    path_from_valleys,
    right_flush,
    right_flush_map,
    small_to_large,
    tree_to_forest,
    valleys_to_highpeaks,
)
from nuschroder.enumeration import enum_dyck, enum_large, enum_small
from nuschroder.forests import labels_of, make_forest
from nuschroder.paths import (
    BasePath,
    DomainError,
    Point,
    high_peaks,
    horiz,
    is_large,
    is_small,
    lattice_points,
    rational_base,
    valleys,
)
from nuschroder.trees import label_word, make_tree, search_trees

from oracles import FLUSH_NODES, FLUSH_NU, FLUSH_PATH, FOREST_ARCS, FOREST_NODES, bases_up_to

def n_to_e_bases(n):
    return [nu for nu in bases_up_to(n) if nu and nu[0] == "N" and nu[-1] == "E"]


class TestDoubling:
    @pytest.mark.parametrize(
        "mu,nu,image",
        [("NE", "NE", "D"), ("NNEE", "NENE", "NED"), ("NENE", "NENE", "DNE")],
    )
    def test_small_examples(self, mu, nu, image):
        assert small_to_large(mu, nu) == image
        assert large_to_small(image, nu) == mu

    def test_left_example_path(self):
        nu = "NEE" * 3
        assert large_to_small("DEDNEEE", nu) == "NDEENEEE"
        assert small_to_large("NDEENEEE", nu) == "DEDNEEE"

    def test_requires_n_to_e_base(self):
        with pytest.raises(DomainError):
            small_to_large("EN", "EN")

    def test_rejects_non_small(self):
        with pytest.raises(DomainError):
            small_to_large("D", "NE")

    def test_bijection_exhaustive(self):
        for nu in n_to_e_bases(8):
            small = enum_small(nu)
            rest = sorted(w for w in enum_large(nu) if not is_small(w, nu))
            image = sorted(small_to_large(mu, nu) for mu in small)
            assert image == rest
            for pi in rest:
                assert small_to_large(large_to_small(pi, nu), nu) == pi

    def test_one_diagonal_step_added(self):
        for nu in n_to_e_bases(7):
            for mu in enum_small(nu):
                assert small_to_large(mu, nu).count("D") == mu.count("D") + 1


class TestPeaksAndValleys:
    def test_two_high_peaks(self):
        nu = BasePath("NEENEENEE")
        d = "NNEENEEEE"
        out = highpeaks_to_valleys(d, nu)
        assert valleys(out) == [(1, 1), (3, 2)]
        assert valleys_to_highpeaks(out, nu) == d

    def test_extremes(self):
        for nu in n_to_e_bases(8):
            top = "N" * nu.a + "E" * nu.b
            assert highpeaks_to_valleys(nu, nu) == top
            assert valleys_to_highpeaks(top, nu) == nu

    def test_counts_preserved_exhaustively(self):
        for nu in n_to_e_bases(9):
            dyck = enum_dyck(nu)
            image = [highpeaks_to_valleys(d, nu) for d in dyck]
            assert sorted(image) == dyck
            for d, v in zip(dyck, image):
                assert len(high_peaks(d, nu)) == len(valleys(v))
                assert valleys_to_highpeaks(v, nu) == d

    def test_path_from_valleys(self):
        assert path_from_valleys([(1, 1), (3, 2)], 3, 5) == "NENEENEE"
        assert path_from_valleys([], 2, 2) == "NNEE"
        with pytest.raises(DomainError):
            path_from_valleys([(2, 1), (1, 2)], 3, 3)


class TestFlushing:
    def test_right_flushing_example(self):
        t = right_flush(FLUSH_PATH, FLUSH_NU)
        assert set(t.nodes) == FLUSH_NODES
        assert label_word(t) == FLUSH_PATH

    def test_y_coordinates_preserved(self):
        for nu in bases_up_to(7):
            for mu in enum_small(nu):
                image = right_flush_map(mu, nu)
                assert [p.y for p in image] == [p.y for p in lattice_points(mu)]

    def test_left_after_right_is_identity(self):
        for nu in bases_up_to(8):
            for mu in enum_small(nu):
                assert left_flush(right_flush(mu, nu)) == mu

    def test_right_after_left_is_identity(self):
        for nu in bases_up_to(7):
            for t in search_trees(nu):
                assert right_flush(left_flush(t), nu) == t

    def test_left_flush_is_label_word(self):
        for nu in bases_up_to(7):
            for t in search_trees(nu):
                assert left_flush(t) == label_word(t)

    def test_hroot_equals_horiz(self):
        for nu in bases_up_to(7):
            for mu in enum_small(nu):
                t = right_flush(mu, nu)
                for node, point in left_flush_points(t).items():
                    assert hroot(t, node) == horiz(nu, point)

    def test_hroot_missing_node(self, nu35):
        t = right_flush(nu35, nu35)
        with pytest.raises(DomainError):
            hroot(t, (2, 0))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 5), st.integers(1, 6), st.data())
    def test_rational_roundtrip(self, a, b, data):
        nu = rational_base(a, b)
        mu = data.draw(st.sampled_from(enum_small(nu)))
        t = right_flush(mu, nu)
        assert left_flush(t) == mu and len(t) == len(mu) + 1


class TestForestsAndTrees:
    def test_eight_arc_example(self, nu35):
        f = make_forest(labels_of(nu35), FOREST_ARCS)
        t = forest_to_tree(f)
        assert t.base == nu35
        assert set(t.nodes) == FOREST_NODES
        assert tree_to_forest(t) == f

    def test_roundtrip_exhaustive(self):
        for nu in bases_up_to(8):
            for mu in enum_small(nu):
                t = right_flush(mu, nu)
                f = tree_to_forest(t)
                assert len(f.arcs) == len(t)
                assert forest_to_tree(f) == t

    def test_tree_of_forest_is_valid(self):
        t = make_tree(sorted(FOREST_NODES), rational_base(3, 5))
        assert is_large(label_word(t), t.base)
