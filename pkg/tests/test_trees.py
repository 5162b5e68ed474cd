import json

import pytest

from nuschroder.enumeration import enum_small
from nuschroder.paths import DomainError, Point, rational_base
from nuschroder.trees import (
    NuTree,
    contractions,
    diag_rank,
    incompatible,
    is_binary,
    label_word,
    labels,
    leaves,
    make_tree,
    parent,
    post_order,
    rotate,
    run_leaves,
    search_binary_trees,
    search_trees,
    validate_tree,
)

from oracles import DIAG_AFTER, DIAG_BEFORE, LEFT_TREE, RIGHT_TREE, bases_up_to


class TestCompatibility:
    def test_examples(self, nu35):
        assert not incompatible((0, 1), (2, 3), nu35)
        assert incompatible((0, 2), (1, 3), nu35)
        assert not incompatible((1, 1), (1, 1), nu35)

    def test_point_below_rejected(self, nu35):
        with pytest.raises(DomainError):
            incompatible((1, 0), (2, 3), nu35)


class TestValidation:
    def test_reference_trees(self, nu35):
        assert validate_tree(LEFT_TREE, nu35)
        assert validate_tree(RIGHT_TREE, nu35)
        assert is_binary(make_tree(LEFT_TREE, nu35))
        assert not is_binary(make_tree(RIGHT_TREE, nu35))

    def test_right_tree_is_left_minus_two_points(self, nu35):
        rest = [p for p in LEFT_TREE if p not in [(0, 1), (2, 2)]]
        assert sorted(rest) == sorted(RIGHT_TREE)

    def test_missing_row(self, nu35):
        verdict = validate_tree([p for p in LEFT_TREE if p != (0, 0)], nu35)
        assert not verdict
        assert "row 0" in verdict.reason

    def test_missing_root(self, nu35):
        verdict = validate_tree([p for p in LEFT_TREE if p != (0, 3)], nu35)
        assert not verdict and "root" in verdict.reason

    def test_incompatible_pair_named(self, nu35):
        verdict = validate_tree(LEFT_TREE + [(1, 2)], nu35)
        assert not verdict and "incompatible" in verdict.reason

    def test_smallest_binary_tree(self):
        t = make_tree([(0, 1), (0, 0), (1, 1)], "NE")
        assert is_binary(t)

    def test_make_tree_raises(self, nu35):
        with pytest.raises(DomainError):
            make_tree([(0, 3)], nu35)

    def test_json_roundtrip(self, nu35):
        t = make_tree(LEFT_TREE, nu35)
        data = json.loads(json.dumps(t.to_json()))
        assert data["nodes"][0] == [0, 0]
        assert NuTree.from_json(data) == t


class TestStructure:
    def test_parent_rules(self, nu35):
        right = make_tree(RIGHT_TREE, nu35)
        assert parent(right, (1, 1)) == (0, 3)
        assert labels(right)[Point(1, 1)] == "D"
        left = make_tree(LEFT_TREE, nu35)
        assert parent(left, (0, 1)) == (0, 3)
        assert parent(left, (0, 0)) == (0, 1)

    def test_diagonal_example_labels(self, nu35):
        t = make_tree(DIAG_BEFORE, nu35)
        lab = labels(t)
        assert (lab[Point(1, 2)], lab[Point(1, 1)], lab[Point(2, 2)]) == ("D", "N", "E")

    def test_root_has_no_parent(self, nu35):
        with pytest.raises(DomainError):
            parent(make_tree(LEFT_TREE, nu35), (0, 3))

    def test_leaves_nu35(self, nu35):
        expected = {(0, 0), (1, 1), (3, 2), (5, 3)}
        for t in search_trees(nu35):
            assert leaves(t) == expected
        assert leaves(make_tree([(0, 1), (0, 0), (1, 1)], "NE")) == {(0, 0), (1, 1)}

    def test_leaves_characterise_nu(self):
        for nu in bases_up_to(7):
            runs = run_leaves(nu)
            seen = {frozenset(leaves(t)) for t in search_trees(nu)}
            assert seen == {frozenset(runs)}
            # distinct base paths of equal size have distinct leaf sets
        keyed = {}
        for nu in bases_up_to(7):
            key = (nu.a, nu.b, frozenset(run_leaves(nu)))
            assert key not in keyed
            keyed[key] = nu

    def test_exactly_one_parent_rule(self):
        for nu in bases_up_to(6):
            for t in search_trees(nu):
                for p in t.nodes:
                    if p == t.root:
                        continue
                    above = any(q.x == p.x and q.y > p.y for q in t.nodes)
                    left = any(q.y == p.y and q.x < p.x for q in t.nodes)
                    assert not (above and left)
                    parent(t, p)  # raises if the north-west rule is ambiguous

    def test_post_order_is_row_sweep(self):
        for nu in bases_up_to(6):
            for t in search_trees(nu):
                sweep = sorted((p for p in t.nodes if p != t.root), key=lambda p: (p.y, -p.x))
                assert post_order(t) == sweep

    def test_label_word_of_top_path_tree(self):
        for nu in bases_up_to(6):
            assert label_word(make_tree(_top_path_tree(nu), nu)) == "N" * nu.a + "E" * nu.b


class TestCounts:
    def test_trees_match_paths(self):
        for nu in bases_up_to(7):
            assert len(search_trees(nu)) == len(enum_small(nu))

    def test_binary_trees_match_dyck_and_size(self):
        for nu in bases_up_to(7):
            binary = search_binary_trees(nu)
            assert {len(t) for t in binary} == {nu.a + nu.b + 1}
            assert all(diag_rank(t) == 0 for t in binary)

    def test_rank_is_missing_node_count(self):
        for nu in bases_up_to(6):
            for t in search_trees(nu):
                assert diag_rank(t) == nu.a + nu.b + 1 - len(t)


class TestMoves:
    def test_right_contractions_of_binary_example(self, nu35):
        found = {(k, q) for k, q, _ in contractions(make_tree(LEFT_TREE, nu35))}
        assert ("right", (0, 1)) in found
        assert ("right", (2, 2)) in found

    def test_diagonal_example(self, nu35):
        moves = contractions(make_tree(DIAG_BEFORE, nu35))
        diag = [(q, s) for k, q, s in moves if k == "diagonal"]
        assert diag == [(Point(1, 2), make_tree(DIAG_AFTER, nu35))]

    def test_root_and_leaves_admit_no_contraction(self):
        t = make_tree([(0, 1), (0, 0), (1, 1)], "NE")
        assert contractions(t) == []

    def test_top_rank_trees_are_maximal(self):
        for nu in bases_up_to(6):
            trees = search_trees(nu)
            top = max(diag_rank(t) for t in trees)
            for t in trees:
                if diag_rank(t) == top:
                    assert contractions(t) == []

    def test_contractions_are_exactly_valid_removals(self):
        for nu in bases_up_to(6):
            for t in search_trees(nu):
                moved = {s for _, _, s in contractions(t)}
                valid = set()
                for q in t.nodes:
                    rest = [p for p in t.nodes if p != q]
                    if validate_tree(rest, nu):
                        valid.add(NuTree(nu, tuple(rest)))
                assert moved == valid

    def test_contraction_closure(self):
        # every tree is reachable from binary trees by contractions
        for nu in bases_up_to(7):
            reach = set(search_binary_trees(nu))
            frontier = list(reach)
            while frontier:
                t = frontier.pop()
                for _, _, s in contractions(t):
                    if s not in reach:
                        reach.add(s)
                        frontier.append(s)
            assert reach == set(search_trees(nu))

    def test_leaf_count_invariant_under_contraction(self, nu35):
        for t in search_trees(nu35):
            for _, _, s in contractions(t):
                assert len(leaves(s)) == len(leaves(t))

    def test_rotation_inverse(self):
        for nu in bases_up_to(6):
            for t in search_binary_trees(nu):
                for q in t.nodes:
                    if q == t.root:
                        continue
                    try:
                        r = rotate(t, q, "right")
                    except DomainError:
                        continue
                    moved = (set(r.nodes) - set(t.nodes)).pop()
                    assert is_binary(r) and len(r) == len(t)
                    assert rotate(r, moved, "left") == t

    def test_rotation_on_example(self, nu35):
        t = make_tree(LEFT_TREE, nu35)
        r = rotate(t, (0, 1), "right")
        # q = (0,1) moves to the corner (r.x, p.y) = (1, 3)
        assert (1, 3) in r and (0, 1) not in r
        assert is_binary(r)

    def test_rotation_pattern_mismatch(self, nu35):
        with pytest.raises(DomainError):
            rotate(make_tree(LEFT_TREE, nu35), (0, 0), "right")

    def test_rotation_count_nu35(self):
        nu = rational_base(3, 5)
        total = sum(
            1
            for t in search_binary_trees(nu)
            for q in t.nodes
            if q != t.root and _rotates(t, q)
        )
        assert total == 8  # one per cover of the 7 Dyck paths


def _top_path_tree(nu):
    # rightmost point of every lower row of R_nu, plus the whole top row
    lo = [0] + [y for y in _heights(nu)]
    right = [max(x for x, h in enumerate(lo) if h <= y) for y in range(nu.a)]
    return [(x, y) for y, x in enumerate(right)] + [(x, nu.a) for x in range(nu.b + 1)]


def _heights(nu):
    y = 0
    for s in nu:
        if s == "N":
            y += 1
        else:
            yield y


def _rotates(t, q):
    try:
        rotate(t, q, "right")
        return True
    except DomainError:
        return False
