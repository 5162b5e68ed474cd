"""nu-Schroder trees as sets of pairwise nu-compatible lattice points.

The root sits at the top-left corner (0, a).  Each non-root node gets a
parent (the nearest node above it, else the nearest node to its left, else
the north-west corner of the unique empty box) and a label N, E or D
according to where that parent lies.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .paths import (
    BasePath,
    DomainError,
    Point,
    StepWord,
    as_base,
    in_region,
    run_bounds,
)


class Check(NamedTuple):
    """Boolean verdict plus the reason for a negative one."""

    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def region_points(nu) -> list[Point]:
    """Lattice points of R_nu, sorted row-major."""
    nu = as_base(nu)
    lo, _ = run_bounds(nu)
    return sorted(
        (Point(x, y) for x in range(nu.b + 1) for y in range(lo[x], nu.a + 1)),
        key=lambda p: (p.y, p.x),
    )


def _incompatible(p, q, lo) -> bool:
    (px, py), (qx, qy) = p, q
    if px == qx or py == qy:
        return False
    if (px < qx) != (py < qy):
        return False
    # the enclosing box lies in R_nu iff its south-east corner does
    return min(py, qy) >= lo[max(px, qx)]


def incompatible(p, q, nu) -> bool:
    nu = as_base(nu)
    for r in (p, q):
        if not in_region(nu, r):
            raise DomainError(f"point {tuple(r)} is not in R_{nu}")
    lo, _ = run_bounds(nu)
    return _incompatible(p, q, lo)


@dataclass(frozen=True)
class NuTree:
    base: BasePath
    nodes: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "base", as_base(self.base))
        canon = tuple(sorted({Point(*p) for p in self.nodes}, key=lambda p: (p.y, p.x)))
        object.__setattr__(self, "nodes", canon)
        object.__setattr__(self, "root", Point(0, self.base.a))
        object.__setattr__(self, "_node_set", frozenset(canon))

    def __contains__(self, p) -> bool:
        return tuple(p) in self._node_set

    def __len__(self) -> int:
        return len(self.nodes)

    def _memo(self, key: str, build):
        # derived data is cached on the instance; the tree itself never changes
        try:
            return self.__dict__[key]
        except KeyError:
            value = build()
            object.__setattr__(self, key, value)
            return value

    def to_json(self) -> dict:
        return {"nu": str(self.base), "nodes": [[p.x, p.y] for p in self.nodes]}

    @classmethod
    def from_json(cls, data: dict) -> "NuTree":
        return make_tree(data["nodes"], data["nu"])


def validate_tree(nodes: Iterable, nu) -> Check:
    nu = as_base(nu)
    pts = sorted({Point(*p) for p in nodes}, key=lambda p: (p.y, p.x))
    root = Point(0, nu.a)
    lo, _ = run_bounds(nu)
    for p in pts:
        if not in_region(nu, p):
            return Check(False, f"node {tuple(p)} lies outside R_nu")
    if root not in pts:
        return Check(False, f"root {tuple(root)} missing")
    rows = {p.y for p in pts}
    for y in range(nu.a + 1):
        if y not in rows:
            return Check(False, f"row {y} is empty")
    cols = {p.x for p in pts}
    for x in range(nu.b + 1):
        if x not in cols:
            return Check(False, f"column {x} is empty")
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            if _incompatible(p, q, lo):
                return Check(False, f"nodes {tuple(p)} and {tuple(q)} are incompatible")
    return Check(True)


def make_tree(nodes: Iterable, nu) -> NuTree:
    nu = as_base(nu)
    nodes = [Point(*p) for p in nodes]
    verdict = validate_tree(nodes, nu)
    if not verdict:
        raise DomainError(f"not a nu-Schroder tree: {verdict.reason}")
    return NuTree(nu, tuple(nodes))


def is_binary(t: NuTree) -> bool:
    lo, _ = run_bounds(t.base)
    for s in region_points(t.base):
        if s in t:
            continue
        if not any(_incompatible(s, p, lo) for p in t.nodes):
            return False
    return True


def parent(t: NuTree, p) -> Point:
    p = Point(*p)
    if p not in t:
        raise DomainError(f"{tuple(p)} is not a node")
    if p == t.root:
        raise DomainError("the root has no parent")
    above = [q for q in t.nodes if q.x == p.x and q.y > p.y]
    if above:
        return min(above, key=lambda q: q.y)
    left = [q for q in t.nodes if q.y == p.y and q.x < p.x]
    if left:
        return max(left, key=lambda q: q.x)
    found = []
    for q in t.nodes:
        if q.x < p.x and q.y > p.y:
            inside = any(
                r != p and r != q and q.x <= r.x <= p.x and p.y <= r.y <= q.y for r in t.nodes
            )
            if not inside:
                found.append(q)
    if len(found) != 1:
        raise DomainError(f"no unique north-west parent for {tuple(p)}: {found}")
    return found[0]


def parents(t: NuTree) -> dict[Point, Point]:
    return t._memo("_parents", lambda: {p: parent(t, p) for p in t.nodes if p != t.root})


def _label(p: Point, q: Point) -> str:
    if q.x == p.x:
        return "N"
    if q.y == p.y:
        return "E"
    return "D"


def labels(t: NuTree) -> dict[Point, str]:
    return t._memo("_labels", lambda: {p: _label(p, q) for p, q in parents(t).items()})


def children(t: NuTree) -> dict[Point, list[Point]]:
    """Children of every node, counter-clockwise from straight down to east."""
    kids: dict[Point, list[Point]] = {p: [] for p in t.nodes}
    for p, q in parents(t).items():
        kids[q].append(p)
    for q, ks in kids.items():
        # slope key: 0 for a child straight below, 1 for one straight east
        ks.sort(key=lambda c: Fraction(c.x - q.x, (c.x - q.x) + (q.y - c.y)))
    return kids


def leaves(t: NuTree) -> set[Point]:
    """Non-root nodes that are nobody's parent."""
    par = parents(t)
    used = set(par.values())
    return {p for p in par if p not in used}


def run_leaves(nu) -> set[Point]:
    """Starts of vertical runs and ends of horizontal runs of ``nu``."""
    nu = as_base(nu)
    out = set()
    x = y = 0
    for i, s in enumerate(nu):
        prev = nu[i - 1] if i else None
        nxt = nu[i + 1] if i + 1 < len(nu) else None
        if s == "N" and prev != "N":
            out.add(Point(x, y))
        if s == "N":
            y += 1
        else:
            x += 1
            if nxt != "E":
                out.add(Point(x, y))
    return out


def post_order(t: NuTree) -> list[Point]:
    """Counter-clockwise post-order of the non-root nodes."""
    kids = children(t)
    out: list[Point] = []
    stack = [(t.root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            out.append(node)
            continue
        stack.append((node, True))
        for c in reversed(kids[node]):
            stack.append((c, False))
    out.pop()  # the root
    return out


def label_word(t: NuTree) -> StepWord:
    lab = labels(t)
    return StepWord("".join(lab[p] for p in post_order(t)))


def diag_rank(t: NuTree) -> int:
    """Number of D-labelled nodes; equals a + b + 1 - |T|."""
    return sum(1 for v in labels(t).values() if v == "D")


def _neighbours(t: NuTree, q: Point):
    below = [p for p in t.nodes if p.x == q.x and p.y < q.y]
    right = [p for p in t.nodes if p.y == q.y and p.x > q.x]
    first_below = max(below, key=lambda p: p.y) if below else None
    first_right = min(right, key=lambda p: p.x) if right else None
    return first_below, first_right


def contractions(t: NuTree) -> list[tuple[str, Point, NuTree]]:
    """All single-node removals that are right, left or diagonal contractions."""
    out = []
    lab = labels(t)
    for q in t.nodes:
        if q == t.root:
            continue
        below, right = _neighbours(t, q)
        kind = None
        if lab[q] == "N" and right is not None:
            kind = "right"
        elif lab[q] == "E" and below is not None:
            kind = "left"
        elif lab[q] == "D" and below is not None and right is not None:
            kind = "diagonal"
        if kind:
            rest = tuple(p for p in t.nodes if p != q)
            out.append((kind, q, NuTree(t.base, rest)))
    return out


def rotate(t: NuTree, q, direction: str) -> NuTree:
    """Move ``q`` to the opposite corner of the box spanned by its neighbours.

    ``right``: q has a node p straight above it (its parent) and r is the first
    node to its right; q moves to (r.x, p.y).  ``left``: p is the first node
    to the left of q and r the first node below; q moves to (p.x, r.y).
    """
    q = Point(*q)
    if q not in t or q == t.root:
        raise DomainError(f"{tuple(q)} is not a non-root node")
    p = parent(t, q)
    below, right = _neighbours(t, q)
    if direction == "right":
        if p.x != q.x or right is None:
            raise DomainError(f"no right-rotation pattern at {tuple(q)}")
        new = Point(right.x, p.y)
    elif direction == "left":
        if p.y != q.y or below is None:
            raise DomainError(f"no left-rotation pattern at {tuple(q)}")
        new = Point(p.x, below.y)
    else:
        raise ValueError(direction)
    nodes = [n for n in t.nodes if n != q] + [new]
    verdict = validate_tree(nodes, t.base)
    if not verdict or new in t:
        raise DomainError(f"rotation at {tuple(q)} does not give a tree: {verdict.reason}")
    return NuTree(t.base, tuple(nodes))


# -- direct search (used as an oracle) ---------------------------------------


def search_trees(nu) -> list[NuTree]:
    """All nu-Schroder trees by backtracking over compatible point sets."""
    nu = as_base(nu)
    lo, _ = run_bounds(nu)
    root = Point(0, nu.a)
    pts = [p for p in region_points(nu) if p != root]
    out = []
    chosen = [root]

    def rec(i):
        if i == len(pts):
            rows = {p.y for p in chosen}
            cols = {p.x for p in chosen}
            if len(rows) == nu.a + 1 and len(cols) == nu.b + 1:
                out.append(NuTree(nu, tuple(chosen)))
            return
        p = pts[i]
        if all(not _incompatible(p, q, lo) for q in chosen):
            chosen.append(p)
            rec(i + 1)
            chosen.pop()
        rec(i + 1)

    rec(0)
    return out


def search_binary_trees(nu) -> list[NuTree]:
    return [t for t in search_trees(nu) if is_binary(t)]
