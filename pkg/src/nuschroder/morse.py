"""Acyclic matching on the face poset of small paths.

A path is *upper* when some D step has no valley before it, *lower* when it
is not upper but has a valley, and *critical* otherwise (only N^a E^b).
Upper paths are matched with the path obtained by turning that D into EN.
"""
from __future__ import annotations

from dataclasses import dataclass

from .paths import DomainError, StepWord, as_base, as_word, is_small
from .poset import FacePoset, build_path_poset, f_vector

UPPER, LOWER, CRITICAL = "upper", "lower", "critical"


class VerificationError(RuntimeError):
    """A certificate check failed; ``witness`` names what went wrong."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def _first_free_d(w: str):
    """Index of the first D step with no EN pair anywhere before it."""
    for k, s in enumerate(w):
        if s == "D":
            return k
        if s == "E" and k + 1 < len(w) and w[k + 1] == "N":
            return None
    return None


def _first_valley(w: str):
    for k in range(len(w) - 1):
        if w[k] == "E" and w[k + 1] == "N":
            return k
    return None


def classify(w, nu) -> str:
    nu = as_base(nu)
    w = as_word(w)
    if not is_small(w, nu):
        raise DomainError(f"{w} is not a small path over {nu}")
    if _first_free_d(w) is not None:
        return UPPER
    if _first_valley(w) is not None:
        return LOWER
    return CRITICAL


def match_down(w, nu) -> StepWord:
    if classify(w, nu) != UPPER:
        raise DomainError(f"{w} is not an upper path")
    k = _first_free_d(w)
    return StepWord(w[:k] + "EN" + w[k + 1:])


def match_up(w, nu) -> StepWord:
    if classify(w, nu) != LOWER:
        raise DomainError(f"{w} is not a lower path")
    k = _first_valley(w)
    return StepWord(w[:k] + "D" + w[k + 2:])


@dataclass(frozen=True)
class MorseMatching:
    pairs: tuple  # (lower index, upper index)
    critical: tuple

    def to_json(self, P: FacePoset) -> dict:
        return {
            "pairs": [list(p) for p in self.pairs],
            "critical": [P.labels[i] for i in self.critical],
        }


def build_matching(P: FacePoset) -> MorseMatching:
    nu = P.base
    pairs, critical = [], []
    for i, w in enumerate(P.items):
        kind = classify(w, nu)
        if kind == UPPER:
            pairs.append((P.index[match_down(w, nu)], i))
        elif kind == CRITICAL:
            critical.append(i)
    return MorseMatching(tuple(sorted(pairs)), tuple(sorted(critical)))


def matching_witness(P: FacePoset, M: MorseMatching):
    """First violated matching invariant, or None."""
    seen: set[int] = set()
    for lo, hi in M.pairs:
        if (lo, hi) not in P.covers:
            return f"pair {(lo, hi)} is not a cover"
        for v in (lo, hi):
            if v in seen:
                return f"element {v} is matched twice"
            seen.add(v)
    for c in M.critical:
        if c in seen:
            return f"critical element {c} is also matched"
        seen.add(c)
    if seen != set(range(len(P))):
        missing = sorted(set(range(len(P))) - seen)
        return f"elements {missing} are neither matched nor critical"
    return None


def verify_matching(P: FacePoset, M: MorseMatching) -> bool:
    return matching_witness(P, M) is None


def _reoriented(P: FacePoset, M: MorseMatching) -> list[list[int]]:
    matched = set(M.pairs)
    succ: list[list[int]] = [[] for _ in range(len(P))]
    for lo, hi in P.covers:
        if (lo, hi) in matched:
            succ[lo].append(hi)
        else:
            succ[hi].append(lo)
    return succ


def find_cycle(P: FacePoset, M: MorseMatching):
    """A directed cycle of the reoriented Hasse diagram, or None."""
    succ = _reoriented(P, M)
    state = [0] * len(P)  # 0 new, 1 on stack, 2 done
    for start in range(len(P)):
        if state[start]:
            continue
        stack = [(start, iter(succ[start]))]
        path = [start]
        state[start] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                path.pop()
                state[node] = 2
            elif state[nxt] == 1:
                return path[path.index(nxt):] + [nxt]
            elif state[nxt] == 0:
                state[nxt] = 1
                stack.append((nxt, iter(succ[nxt])))
                path.append(nxt)
    return None


def verify_acyclic(P: FacePoset, M: MorseMatching) -> bool:
    return find_cycle(P, M) is None


def alternating_cycle(P: FacePoset, M: MorseMatching):
    """Search for b1 > d(b1) < b2 > d(b2) < ... < b1 directly.

    Each step goes from a matched upper element b to its partner d(b), then
    up a non-matching cover to another matched upper element.
    """
    down = {hi: lo for lo, hi in M.pairs}
    ups: dict[int, list[int]] = {}
    for lo, hi in P.covers:
        ups.setdefault(lo, []).append(hi)
    step = {
        b: sorted(c for c in ups.get(d, []) if c != b and c in down) for b, d in down.items()
    }
    state: dict[int, int] = {}

    def visit(b, trail):
        state[b] = 1
        trail.append(b)
        for c in step[b]:
            if state.get(c) == 1:
                return trail[trail.index(c):] + [c]
            if c not in state:
                found = visit(c, trail)
                if found:
                    return found
        trail.pop()
        state[b] = 2
        return None

    for b in sorted(step):
        if b not in state:
            found = visit(b, [])
            if found:
                return found
    return None


@dataclass(frozen=True)
class Certificate:
    critical_words: list
    c_vector: list

    @property
    def contractible(self) -> bool:
        return self.c_vector == [1]


def contractibility_certificate(nu) -> Certificate:
    """Build the matching on the path poset and check its hypotheses."""
    nu = as_base(nu)
    P = build_path_poset(nu)
    M = build_matching(P)
    reason = matching_witness(P, M)
    if reason:
        raise VerificationError(f"matching over {nu} is invalid: {reason}", witness=(str(nu), reason))
    cycle = find_cycle(P, M)
    if cycle:
        words = [P.labels[i] for i in cycle]
        raise VerificationError(f"matching over {nu} has a cycle", witness=(str(nu), words))
    crit = FacePoset(nu, [P.items[i] for i in M.critical], [P.ranks[i] for i in M.critical], set())
    return Certificate([P.labels[i] for i in M.critical], f_vector(crit))
