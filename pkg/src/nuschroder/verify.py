"""Invariant sweep over every base path up to a given length.

Each check yields ``Failure`` records carrying the base path, the offending
object and the property name, so a failing run always prints a witness.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .bijections import (
    hroot,
    large_to_small,
    left_flush,
    right_flush,
    right_flush_map,
    small_to_large,
)
from .enumeration import (
    enum_large,
    enum_small,
    euler_alternating,
    narayana_shift,
    narayana_counts,
    sch_counts,
)
from .morse import VerificationError, build_matching, contractibility_certificate, match_down
from .paths import all_bases, area2, diag_count, horiz, is_small, lattice_points
from .poset import (
    adjoin_bounds,
    build_path_poset,
    check_isomorphism,
    eulerian_witness,
    f_vector,
    is_lattice,
    path_contractions,
)
from .trees import leaves, run_leaves, search_trees


@dataclass(frozen=True)
class Failure:
    prop: str
    nu: str
    witness: str

    def __str__(self) -> str:
        return f"{self.prop}: nu={self.nu or '(empty)'} witness={self.witness}"


def check_counts(nu) -> Iterator[Failure]:
    sch = sch_counts(nu)
    if euler_alternating(nu) != 1:
        yield Failure("euler_alternating", nu, f"sch={sch}")
    shifted = narayana_shift(narayana_counts(nu))
    if shifted != sch:
        yield Failure("narayana_shift", nu, f"shifted={shifted} sch={sch}")
    if f_vector(build_path_poset(nu)) != sch:
        yield Failure("f_vector", nu, f"sch={sch}")


def check_doubling(nu) -> Iterator[Failure]:
    small = enum_small(nu)
    large = enum_large(nu)
    n2e = bool(nu) and nu[0] == "N" and nu[-1] == "E"
    if (len(large) == 2 * len(small)) != n2e:
        yield Failure("doubling_iff", nu, f"large={len(large)} small={len(small)}")
    if not n2e:
        return
    rest = set(large) - set(small)
    images = set()
    for mu in small:
        pi = small_to_large(mu, nu)
        if pi not in rest or large_to_small(pi, nu) != mu:
            yield Failure("doubling_bijection", nu, f"{mu} -> {pi}")
            return
        images.add(pi)
    if images != rest:
        yield Failure("doubling_onto", nu, f"missed {sorted(rest - images)[:3]}")


def check_flushing(nu) -> Iterator[Failure]:
    small = enum_small(nu)
    runs = run_leaves(nu)
    for mu in small:
        t = right_flush(mu, nu)
        if left_flush(t) != mu:
            yield Failure("flush_roundtrip", nu, mu)
            return
        image = right_flush_map(mu, nu)
        for p, node in zip(lattice_points(mu), image):
            if hroot(t, node) != horiz(nu, p):
                yield Failure("hroot_equals_horiz", nu, f"{mu} at {tuple(p)}")
                return
        if leaves(t) != runs:
            yield Failure("leaf_characterization", nu, mu)
            return
    trees = search_trees(nu)
    if len(trees) != len(small):
        yield Failure("tree_count", nu, f"trees={len(trees)} paths={len(small)}")
    for t in trees:
        if right_flush(left_flush(t), nu) != t:
            yield Failure("flush_roundtrip_trees", nu, str(t.nodes))
            return


def check_contractions(nu) -> Iterator[Failure]:
    for w in enum_small(nu):
        a0 = area2(w, nu)
        for kind, c in path_contractions(w, nu):
            d = area2(c, nu) - a0
            ok = d == 1 if kind == "right" else d < 0
            if not ok or diag_count(c) != diag_count(w) + 1 or not is_small(c, nu):
                yield Failure("contraction_area_law", nu, f"{kind}: {w} -> {c} (area2 {d:+d})")
                return


def check_lattice(nu) -> Iterator[Failure]:
    B = adjoin_bounds(build_path_poset(nu))
    if not is_lattice(B):
        yield Failure("lattice", nu, "some pair lacks a meet or join")
    bad = eulerian_witness(B)
    if bad:
        x, y, why = bad
        name = lambda i: B.inner.labels[i] if i < len(B.inner) else "0^"  # noqa: E731
        yield Failure("eulerian_interval", nu, f"[{name(x)}, {name(y)}]: {why}")


def check_isomorphism_prop(nu) -> Iterator[Failure]:
    if not check_isomorphism(nu):
        yield Failure("poset_isomorphism", nu, "path/tree/forest transport disagrees")


def check_morse(nu) -> Iterator[Failure]:
    try:
        cert = contractibility_certificate(nu)
    except VerificationError as err:
        yield Failure("morse_certificate", nu, f"{err} {err.witness}")
        return
    expect = ["N" * nu.a + "E" * nu.b]
    if cert.critical_words != expect or cert.c_vector != [1]:
        yield Failure("morse_critical", nu, f"{cert.critical_words}")
    P = build_path_poset(nu)
    for lo, hi in build_matching(P).pairs:
        sigma = P.items[hi]
        if area2(match_down(sigma, nu), nu) != area2(sigma, nu) - 1:
            yield Failure("morse_area_law", nu, sigma)
            return


# name, check, longest base path it runs on (None: the requested maximum)
CHECKS: list[tuple[str, Callable, int | None]] = [
    ("counts", check_counts, None),
    ("doubling", check_doubling, None),
    ("flushing", check_flushing, None),
    ("contractions", check_contractions, None),
    ("morse", check_morse, None),
    ("lattice", check_lattice, 7),
    ("isomorphism", check_isomorphism_prop, 7),
]


@dataclass
class Report:
    max_len: int
    bases: int
    failures: list
    seconds: float

    @property
    def ok(self) -> bool:
        return not self.failures


def run_suite(max_len: int, stop_early: bool = False) -> Report:
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    start = time.perf_counter()
    failures: list[Failure] = []
    bases = list(all_bases(max_len))
    for nu in bases:
        for _, check, cap in CHECKS:
            if cap is not None and len(nu) > cap:
                continue
            for f in check(nu):
                failures.append(f)
                if stop_early:
                    return Report(max_len, len(bases), failures, time.perf_counter() - start)
    return Report(max_len, len(bases), failures, time.perf_counter() - start)
