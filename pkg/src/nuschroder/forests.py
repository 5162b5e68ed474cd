"""Covering (I, J)-forests on a bipartitioned ground set {1, ..., n}.

Elements of J are stored as plain integers; the overline is presentation
only.  An arc is an ordered pair (i, j) with i in I and j in J.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .paths import BasePath, DomainError, as_base
from .trees import Check


@dataclass(frozen=True)
class Bipartition:
    n: int
    I: frozenset
    J: frozenset

    def __post_init__(self):
        object.__setattr__(self, "I", frozenset(self.I))
        object.__setattr__(self, "J", frozenset(self.J))
        if self.n < 2:
            raise DomainError(f"ground set too small: n={self.n}")
        if self.I & self.J or (self.I | self.J) != frozenset(range(1, self.n + 1)):
            raise DomainError("I and J must partition 1..n")
        if 1 not in self.I or self.n not in self.J:
            raise DomainError("need 1 in I and n in J")


def labels_of(nu) -> Bipartition:
    """Bipartition read off nu: inner nodes 2..n-1 follow nu's steps."""
    nu = as_base(nu)
    n = len(nu) + 2
    I = {1} | {k + 2 for k, s in enumerate(nu) if s == "E"}
    J = {n} | {k + 2 for k, s in enumerate(nu) if s == "N"}
    return Bipartition(n, frozenset(I), frozenset(J))


def base_path_of(bp: Bipartition) -> BasePath:
    return BasePath("".join("E" if k in bp.I else "N" for k in range(2, bp.n)))


@dataclass(frozen=True)
class CoveringForest:
    bipartition: Bipartition
    arcs: tuple

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(sorted({(int(i), int(j)) for i, j in self.arcs})))

    def to_json(self) -> dict:
        bp = self.bipartition
        return {
            "n": bp.n,
            "I": sorted(bp.I),
            "J": sorted(bp.J),
            "arcs": [list(a) for a in self.arcs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CoveringForest":
        bp = Bipartition(data["n"], frozenset(data["I"]), frozenset(data["J"]))
        return make_forest(bp, data["arcs"])


def _crossing(arcs):
    for (i, j), (k, l) in combinations(sorted(arcs), 2):
        # sorted, so i <= k
        if i < k < j < l:
            return (i, j), (k, l)
    return None


def validate_forest(bp: Bipartition, arcs) -> Check:
    arcs = sorted({(i, j) for i, j in arcs})
    for i, j in arcs:
        if i not in bp.I or j not in bp.J:
            return Check(False, f"arc ({i},{j}) does not join I to J")
        if not i < j:
            return Check(False, f"arc ({i},{j}) is not increasing")
    if (1, bp.n) not in arcs:
        return Check(False, f"covering arc (1,{bp.n}) missing")
    pair = _crossing(arcs)
    if pair:
        return Check(False, f"arcs {pair[0]} and {pair[1]} cross")
    touched = {v for a in arcs for v in a}
    for v in range(1, bp.n + 1):
        if v not in touched:
            return Check(False, f"node {v} is isolated")
    return Check(True)


def make_forest(bp: Bipartition, arcs) -> CoveringForest:
    arcs = [tuple(a) for a in arcs]
    verdict = validate_forest(bp, arcs)
    if not verdict:
        raise DomainError(f"not a covering forest: {verdict.reason}")
    return CoveringForest(bp, tuple(arcs))


def forest_covers(f: CoveringForest) -> list[CoveringForest]:
    """Single-arc deletions that leave a covering forest."""
    out = []
    for a in f.arcs:
        rest = [b for b in f.arcs if b != a]
        if validate_forest(f.bipartition, rest):
            out.append(CoveringForest(f.bipartition, tuple(rest)))
    return out


def covering_forests(bp: Bipartition) -> list[CoveringForest]:
    """All covering forests, transported from the small paths of the base path."""
    from .bijections import right_flush, tree_to_forest
    from .enumeration import enum_small

    nu = base_path_of(bp)
    return [tree_to_forest(right_flush(w, nu)) for w in enum_small(nu)]


def search_forests(bp: Bipartition) -> list[CoveringForest]:
    """Direct backtracking search; kept as an independent oracle."""
    candidates = [(i, j) for i in sorted(bp.I) for j in sorted(bp.J) if i < j and (i, j) != (1, bp.n)]
    out = []
    chosen = [(1, bp.n)]

    def rec(k):
        if k == len(candidates):
            touched = {v for a in chosen for v in a}
            if len(touched) == bp.n:
                out.append(CoveringForest(bp, tuple(chosen)))
            return
        a = candidates[k]
        if _crossing(chosen + [a]) is None:
            chosen.append(a)
            rec(k + 1)
            chosen.pop()
        rec(k + 1)

    rec(0)
    return out


def maximal_forests(bp: Bipartition) -> list[CoveringForest]:
    """Covering forests that no further arc can be added to."""
    every = search_forests(bp)
    keys = {f.arcs for f in every}
    out = []
    for f in every:
        s = set(f.arcs)
        if not any(set(g) > s and len(g) == len(s) + 1 for g in keys):
            out.append(f)
    return out
