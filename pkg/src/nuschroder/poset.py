"""Face posets of small nu-Schroder paths, trees and covering forests.

Posets are explicit: an element list, a rank per element and a set of cover
pairs (lower, upper).  Upper sets are kept as int bitsets and memoized.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .bijections import forest_to_tree, left_flush, right_flush
from .enumeration import enum_small
from .forests import Bipartition, base_path_of, forest_covers, labels_of, search_forests
from .paths import DomainError, StepWord, as_base, as_word, diag_count, horiz, is_small, lattice_points
from .trees import contractions, diag_rank, search_trees

# -- contraction moves on paths -----------------------------------------------


def _partner(hz, k: int, target: int, word: str, rule: str):
    """Index of the N step that pairs with a point of horiz value ``target``.

    ``rule="nearest"`` takes the nearest earlier lattice point with that
    horiz value and accepts it only if it starts an N step.  ``rule="nearest_n"``
    skips over non-N points and takes the nearest earlier N with that value.
    """
    for j in range(k - 1, -1, -1):
        if hz[j] != target:
            continue
        if word[j] == "N":
            return j
        if rule == "nearest":
            return None
    return None


def path_contractions(w, nu, rule: str = "nearest") -> list[tuple[str, StepWord]]:
    """Every right, left and diagonal contraction of a small path."""
    nu = as_base(nu)
    w = as_word(w)
    if not is_small(w, nu):
        raise DomainError(f"{w} is not a small path over {nu}")
    pts = lattice_points(w)
    hz = [horiz(nu, p) for p in pts]
    out = []
    for k in range(len(w) - 1):
        if w[k] == "E" and w[k + 1] == "N":
            out.append(("right", StepWord(w[:k] + "D" + w[k + 2:])))
    for k, s in enumerate(w):
        if s != "E":
            continue
        j = _partner(hz, k, hz[k], w, rule)
        if j is not None:
            out.append(("left", StepWord(w[:j] + "D" + w[j + 1:k] + w[k + 1:])))
        if k + 1 < len(w) and w[k + 1] == "D":
            j = _partner(hz, k, hz[k + 1], w, rule)
            if j is not None:
                out.append(("diagonal", StepWord(w[:j] + "D" + w[j + 1:k] + w[k + 1:])))
    for kind, c in out:
        if not is_small(c, nu):
            raise AssertionError(f"{kind} contraction of {w} left the region: {c}")
    return out


# -- generic ranked poset -------------------------------------------------------


@dataclass
class FacePoset:
    base: object
    items: list
    ranks: list[int]
    covers: set[tuple[int, int]]
    labels: list[str] = field(default_factory=list)
    _up: list[int] | None = field(default=None, repr=False)
    _down: list[int] | None = field(default=None, repr=False)

    def __post_init__(self):
        if not self.labels:
            self.labels = [str(x) for x in self.items]
        self.index = {x: i for i, x in enumerate(self.items)}

    def __len__(self) -> int:
        return len(self.items)

    def upper_covers(self, i: int) -> list[int]:
        return sorted(h for l, h in self.covers if l == i)

    def up_sets(self) -> list[int]:
        """Bitset of {j : i <= j} for every i."""
        if self._up is None:
            n = len(self.items)
            above: list[list[int]] = [[] for _ in range(n)]
            for l, h in self.covers:
                above[l].append(h)
            up = [0] * n
            for i in sorted(range(n), key=lambda i: -self.ranks[i]):
                m = 1 << i
                for h in above[i]:
                    m |= up[h]
                up[i] = m
            self._up = up
        return self._up

    def down_sets(self) -> list[int]:
        if self._down is None:
            up = self.up_sets()
            n = len(self.items)
            down = [0] * n
            for i in range(n):
                m = up[i]
                while m:
                    low = m & -m
                    down[low.bit_length() - 1] |= 1 << i
                    m ^= low
            self._down = down
        return self._down

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up_sets()[i] >> j & 1)


def _build(base, items: Sequence[Hashable], rank: Callable, moves: Callable, label=str) -> FacePoset:
    index = {x: i for i, x in enumerate(items)}
    covers = set()
    for i, x in enumerate(items):
        for y in moves(x):
            if y not in index:
                raise AssertionError(f"move from {x} leaves the element set: {y}")
            covers.add((i, index[y]))
    return FacePoset(base, list(items), [rank(x) for x in items], covers, [label(x) for x in items])


def build_path_poset(nu, rule: str = "nearest") -> FacePoset:
    nu = as_base(nu)
    return _build(
        nu,
        enum_small(nu),
        diag_count,
        lambda w: [c for _, c in path_contractions(w, nu, rule)],
    )


def build_tree_poset(nu, source: str = "transport") -> FacePoset:
    nu = as_base(nu)
    if source == "transport":
        trees = [right_flush(w, nu) for w in enum_small(nu)]
    elif source == "search":
        trees = search_trees(nu)
    else:
        raise ValueError(source)
    return _build(
        nu,
        trees,
        diag_rank,
        lambda t: [s for _, _, s in contractions(t)],
        label=lambda t: " ".join(f"({p.x},{p.y})" for p in t.nodes),
    )


def build_forest_poset(bp: Bipartition) -> FacePoset:
    forests = search_forests(bp)
    return _build(
        bp,
        forests,
        lambda f: bp.n - 1 - len(f.arcs),
        forest_covers,
        label=lambda f: " ".join(f"{i}-{j}" for i, j in f.arcs),
    )


def _transport_ok(src: FacePoset, dst: FacePoset, fn: Callable) -> bool:
    """``fn`` is a rank-preserving bijection on elements carrying covers onto covers."""
    if len(src) != len(dst):
        return False
    image = []
    for x in src.items:
        y = fn(x)
        if y not in dst.index:
            return False
        image.append(dst.index[y])
    if len(set(image)) != len(image):
        return False
    if any(src.ranks[i] != dst.ranks[image[i]] for i in range(len(src))):
        return False
    return {(image[l], image[h]) for l, h in src.covers} == dst.covers


def check_isomorphism(nu, rule: str = "nearest") -> bool:
    """Forest -> tree -> path transport of the three independently built posets."""
    nu = as_base(nu)
    paths = build_path_poset(nu, rule)
    trees = build_tree_poset(nu, source="search")
    forests = build_forest_poset(labels_of(nu))
    if base_path_of(forests.base) != nu:
        return False
    return _transport_ok(forests, trees, forest_to_tree) and _transport_ok(trees, paths, left_flush)


def f_vector(P: FacePoset) -> list[int]:
    if not len(P):
        return []
    out = [0] * (max(P.ranks) + 1)
    for r in P.ranks:
        out[r] += 1
    return out


def euler_characteristic(P: FacePoset) -> int:
    return sum((-1) ** i * c for i, c in enumerate(f_vector(P)))


# -- bounded poset ----------------------------------------------------------------


@dataclass
class BoundedPoset:
    """P with a bottom (rank -1) and a top adjoined; the top has no rank."""

    inner: FacePoset

    def __post_init__(self):
        P = self.inner
        m = len(P)
        self.size = m + 2
        self.bottom = m
        self.top = m + 1
        full = (1 << self.size) - 1
        up = [u | (1 << self.top) for u in P.up_sets()]
        up.append(full)  # bottom
        up.append(1 << self.top)
        self.up = up
        down = [0] * self.size
        for i, u in enumerate(up):
            while u:
                low = u & -u
                down[low.bit_length() - 1] |= 1 << i
                u ^= low
        self.down = down
        self.ranks = list(P.ranks) + [-1, None]

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def covers(self) -> set[tuple[int, int]]:
        out = set(self.inner.covers)
        for i in range(len(self.inner)):
            below = self.down[i] & ~(1 << i) & ~(1 << self.bottom)
            if not below:
                out.add((self.bottom, i))
            above = self.up[i] & ~(1 << i) & ~(1 << self.top)
            if not above:
                out.add((i, self.top))
        if not len(self.inner):
            out.add((self.bottom, self.top))
        return out


def adjoin_bounds(P: FacePoset) -> BoundedPoset:
    return BoundedPoset(P)


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _least(bounds: int, up: list[int]):
    for u in _bits(bounds):
        if bounds & ~up[u] == 0:
            return u
    return None


def meet_join(B: BoundedPoset, x: int, y: int):
    join = _least(B.up[x] & B.up[y], B.up)
    meet = _least(B.down[x] & B.down[y], B.down)
    return meet, join


def is_lattice(B: BoundedPoset) -> bool:
    """Every pair has a least upper bound and a greatest lower bound."""
    for x in range(B.size):
        for y in range(x + 1, B.size):
            meet, join = meet_join(B, x, y)
            if meet is None or join is None:
                return False
    return True


def interval(B: BoundedPoset, x: int, y: int) -> list[int]:
    return list(_bits(B.up[x] & B.down[y]))


def eulerian_intervals_check(B: BoundedPoset) -> bool:
    """Every interval [x, y], x < y, avoiding the top has balanced rank parity."""
    return eulerian_witness(B) is None


def eulerian_witness(B: BoundedPoset):
    """First offending interval (x, y, reason), or None."""
    members = [i for i in range(B.size) if i != B.top]
    for l, h in B.covers():
        if B.top in (l, h):
            continue
        if B.ranks[h] != B.ranks[l] + 1:
            return l, h, "cover does not raise the rank by one"
    for x in members:
        for y in _bits(B.up[x] & ~(1 << x) & ~(1 << B.top)):
            even = odd = 0
            for z in interval(B, x, y):
                if B.ranks[z] % 2:
                    odd += 1
                else:
                    even += 1
            if even != odd:
                return x, y, f"{even} even-rank vs {odd} odd-rank elements"
    return None


def mobius(B: BoundedPoset, x: int) -> dict[int, int]:
    """mu(x, y) for every y >= x."""
    mu = {x: 1}
    above = sorted(_bits(B.up[x]), key=lambda z: len(list(_bits(B.down[z] & B.up[x]))))
    for y in above:
        if y == x:
            continue
        mu[y] = -sum(mu[z] for z in _bits(B.up[x] & B.down[y]) if z != y)
    return mu


# -- export -------------------------------------------------------------------------


def _base_text(P: FacePoset) -> str:
    if isinstance(P.base, Bipartition):
        return str(base_path_of(P.base))
    return str(P.base)


def to_json(P: FacePoset) -> dict:
    return {
        "nu": _base_text(P),
        "elements": [{"id": i, "word": P.labels[i], "rank": P.ranks[i]} for i in range(len(P))],
        "covers": [list(c) for c in sorted(P.covers)],
    }


def to_dot(P: FacePoset, matching=None) -> str:
    matched = set(matching.pairs) if matching is not None else set()
    critical = set(matching.critical) if matching is not None else set()
    lines = [f'digraph "{_base_text(P)}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for i in range(len(P)):
        extra = ", style=bold" if i in critical else ""
        lines.append(f'  n{i} [label="{P.labels[i]}"{extra}];')
    for l, h in sorted(P.covers):
        style = " [color=blue, penwidth=2]" if (l, h) in matched else ""
        lines.append(f"  n{l} -> n{h}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
