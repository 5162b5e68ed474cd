"""Explicit bijections between paths, trees and forests.

* ``small_to_large`` / ``large_to_small``: the doubling map between small
  paths and large paths that are not small.
* ``highpeaks_to_valleys`` and its inverse on nu-Dyck paths.
* ``right_flush`` / ``left_flush``: small paths <-> nu-Schroder trees.
* ``forest_to_tree`` / ``tree_to_forest``: covering forests <-> trees.
"""
from __future__ import annotations

from .forests import CoveringForest, base_path_of, labels_of, make_forest
from .paths import (
    DomainError,
    Point,
    StepWord,
    as_base,
    as_word,
    column_heights,
    high_peaks,
    is_dyck,
    is_large,
    is_small,
    lattice_points,
    peaks,
    run_bounds,
    valleys,
)
from .trees import NuTree, labels, make_tree, parents

# -- doubling map -------------------------------------------------------------


def _needs_n_to_e(nu) -> None:
    if not (nu and nu[0] == "N" and nu[-1] == "E"):
        raise DomainError(f"base path must start with N and end with E (got {nu!r})")


def small_to_large(mu, nu) -> StepWord:
    """Send a small path to a large path with a D step on the nu-diagonal.

    Write mu = N mu1 E mu2 where E is the first east step starting at a
    peak apex of nu; the image is mu1 D mu2.
    """
    nu = as_base(nu)
    mu = as_word(mu)
    _needs_n_to_e(nu)
    if not is_small(mu, nu):
        raise DomainError(f"{mu} is not a small path over {nu}")
    apexes = set(peaks(nu))
    pts = lattice_points(mu)
    for k, s in enumerate(mu):
        if s == "E" and pts[k] in apexes:
            # mu starts with N because nu does and mu stays above nu
            return StepWord(mu[1:k] + "D" + mu[k + 1:])
    raise DomainError(f"{mu} has no east step on the diagonal of {nu}")


def large_to_small(pi, nu) -> StepWord:
    """Inverse of ``small_to_large``: undo the last D on the nu-diagonal."""
    nu = as_base(nu)
    pi = as_word(pi)
    _needs_n_to_e(nu)
    if not is_large(pi, nu):
        raise DomainError(f"{pi} is not a large path over {nu}")
    squares = {Point(x, y - 1) for x, y in peaks(nu)}
    pts = lattice_points(pi)
    for k in range(len(pi) - 1, -1, -1):
        if pi[k] == "D" and pts[k] in squares:
            return StepWord("N" + pi[:k] + "E" + pi[k + 1:])
    raise DomainError(f"{pi} has no D step on the diagonal of {nu}")


# -- high peaks and valleys -----------------------------------------------------


def path_from_valleys(points, a: int, b: int) -> StepWord:
    """The unique N/E path from (0,0) to (b,a) with exactly the given valleys."""
    pts = sorted(Point(*p) for p in points)
    out = []
    x = y = 0
    for k, p in enumerate(pts):
        # the first valley may sit on the bottom row, later ones climb strictly
        if p.x <= x or p.y < y or (k and p.y == y):
            raise DomainError(f"valleys {pts} are not strictly increasing from the origin")
        out.append("N" * (p.y - y) + "E" * (p.x - x))
        x, y = p
    out.append("N" * (a - y) + "E" * (b - x))
    w = StepWord("".join(out))
    if sorted(valleys(w)) != pts:
        raise DomainError(f"no path from (0,0) to ({b},{a}) has valleys {pts}")
    return w


def path_from_high_peaks(points, nu) -> StepWord:
    """The lowest nu-Dyck path through the given peak apexes."""
    nu = as_base(nu)
    e = column_heights(nu)
    tops = sorted(Point(*p) for p in points)
    out = []
    prev = 0
    for c in range(nu.b):
        h = max([e[c]] + [q for p, q in tops if p <= c])
        out.append("N" * (h - prev) + "E")
        prev = h
    out.append("N" * (nu.a - prev))
    return StepWord("".join(out))


def highpeaks_to_valleys(d, nu) -> StepWord:
    nu = as_base(nu)
    _needs_n_to_e(nu)
    hp = high_peaks(d, nu)
    return path_from_valleys([(p + 1, q - 1) for p, q in hp], nu.a, nu.b)


def valleys_to_highpeaks(d, nu) -> StepWord:
    nu = as_base(nu)
    _needs_n_to_e(nu)
    d = as_word(d)
    if not is_dyck(d, nu):
        raise DomainError(f"{d} is not a nu-Dyck path over {nu}")
    return path_from_high_peaks([(p - 1, q + 1) for p, q in valleys(d)], nu)


# -- flushing -------------------------------------------------------------------


def _row_width(lo, y: int) -> int:
    """Number of lattice points of R_nu in row y."""
    return sum(1 for h in lo if h <= y)


def right_flush_map(mu, nu) -> list[Point]:
    """Image node of every lattice point of ``mu`` (indexed by path position)."""
    nu = as_base(nu)
    mu = as_word(mu)
    if not is_small(mu, nu):
        raise DomainError(f"{mu} is not a small path over {nu}")
    lo, _ = run_bounds(nu)
    pts = lattice_points(mu)
    image: list[Point] = [None] * len(pts)  # type: ignore[list-item]
    forbidden: set[int] = set()
    k = 0
    for y in range(nu.a + 1):
        row = []
        while k < len(pts) and pts[k].y == y:
            row.append(k)
            k += 1
        free = [x for x in range(_row_width(lo, y) - 1, -1, -1) if x not in forbidden]
        for slot, idx in enumerate(row):
            image[idx] = Point(free[slot], y)
        for idx in row:
            if idx < len(mu) and mu[idx] in "ED":
                forbidden.add(image[idx].x)
    return image


def right_flush(mu, nu) -> NuTree:
    nu = as_base(nu)
    return NuTree(nu, tuple(right_flush_map(mu, nu)))


def left_flush_points(t: NuTree) -> dict[Point, Point]:
    """Left-flushing: node -> lattice point of the path, row by row."""
    lab = labels(t)
    lo, _ = run_bounds(t.base)
    out: dict[Point, Point] = {}
    forbidden: set[int] = set()
    for y in range(t.base.a + 1):
        row = sorted((p for p in t.nodes if p.y == y), key=lambda p: -p.x)
        free = [x for x in range(_row_width(lo, y)) if x not in forbidden]
        for slot, p in enumerate(row):
            out[p] = Point(free[slot], y)
        for p in row:
            if lab.get(p) in ("E", "D"):
                forbidden.add(out[p].x)
    return out


def left_flush(t: NuTree) -> StepWord:
    """Path of a tree by flushing; agrees with the post-order label word."""
    placed = sorted(left_flush_points(t).values(), key=lambda p: (p.y, p.x))
    steps = []
    for p, q in zip(placed, placed[1:]):
        dx, dy = q.x - p.x, q.y - p.y
        if (dx, dy) == (0, 1):
            steps.append("N")
        elif (dx, dy) == (1, 0):
            steps.append("E")
        elif (dx, dy) == (1, 1):
            steps.append("D")
        else:
            raise DomainError(f"left-flushed points {tuple(p)} -> {tuple(q)} are not a step")
    return StepWord("".join(steps))


def hroot(t: NuTree, p) -> int:
    """E/D-labelled nodes on the way from p to the root (p included)."""
    p = Point(*p)
    if p not in t:
        raise DomainError(f"{tuple(p)} is not a node")
    par = parents(t)
    lab = labels(t)
    count = 0
    while p != t.root:
        if lab[p] in ("E", "D"):
            count += 1
        p = par[p]
    return count


# -- forests and trees ---------------------------------------------------------


def tree_to_forest(t: NuTree) -> CoveringForest:
    bp = labels_of(t.base)
    I, J = sorted(bp.I), sorted(bp.J)
    arcs = [(I[p.x], J[p.y]) for p in t.nodes]
    return make_forest(bp, arcs)


def forest_to_tree(f: CoveringForest) -> NuTree:
    nu = base_path_of(f.bipartition)
    I = {v: k for k, v in enumerate(sorted(f.bipartition.I))}
    J = {v: k for k, v in enumerate(sorted(f.bipartition.J))}
    return make_tree([(I[i], J[j]) for i, j in f.arcs], nu)
