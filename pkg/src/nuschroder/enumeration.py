"""Exhaustive generators and exact counters for nu-Dyck and nu-Schroder paths.

Everything here is exact integer arithmetic.  Enumeration order is
lexicographic in the alphabet D < E < N.
"""
from __future__ import annotations

from math import comb, gcd
from typing import NamedTuple

from . import kernels
from .paths import (
    BasePath,
    DomainError,
    StepWord,
    as_base,
    column_heights,
    rational_base,
    valleys,
)

_NEVER = 1 << 30


def _bounds(nu: BasePath, kind: str):
    """Per-column minimal start heights (east, diagonal) for ``kind`` paths."""
    e = column_heights(nu)
    if kind == "dyck":
        return e, [_NEVER] * len(e)
    if kind == "small":
        return e, list(e)
    if kind == "large":
        # under a peak the lowered base path has a D step starting one unit lower
        peak_cols = [x for x, y in _peak_columns(nu)]
        d = list(e)
        for x in peak_cols:
            d[x] -= 1
        return e, d
    raise ValueError(kind)


def _peak_columns(nu: BasePath):
    x = y = 0
    out = []
    prev = None
    for s in nu:
        if s == "E" and prev == "N":
            out.append((x, y))
        if s == "N":
            y += 1
        else:
            x += 1
        prev = s
    return out


def _enum(nu, kind) -> list[StepWord]:
    nu = as_base(nu)
    min_e, min_d = _bounds(nu, kind)
    return [str.__new__(StepWord, w) for w in kernels.enum_words(nu.a, nu.b, min_e, min_d)]


def enum_dyck(nu) -> list[StepWord]:
    """nu-Dyck paths in lexicographic order."""
    return _enum(nu, "dyck")


def enum_small(nu) -> list[StepWord]:
    return _enum(nu, "small")


def enum_large(nu) -> list[StepWord]:
    return _enum(nu, "large")


def _count(nu, kind) -> list[int]:
    nu = as_base(nu)
    min_e, min_d = _bounds(nu, kind)
    return kernels.count_by_diag(nu.a, nu.b, min_e, min_d)


def sch_counts(nu) -> list[int]:
    """Entry i: number of small nu-Schroder paths with i diagonal steps."""
    return _count(nu, "small")


def large_counts(nu) -> list[int]:
    return _count(nu, "large")


def narayana_counts(nu) -> list[int]:
    """Entry i: number of nu-Dyck paths with exactly i valleys."""
    counts: list[int] = []
    for w in enum_dyck(nu):
        k = len(valleys(w))
        if k >= len(counts):
            counts.extend([0] * (k + 1 - len(counts)))
        counts[k] += 1
    return counts


def narayana_shift(nar: list[int]) -> list[int]:
    """Coefficients of N(x+1) given those of N(x)."""
    out = [0] * len(nar)
    for j, c in enumerate(nar):
        for i in range(j + 1):
            out[i] += c * comb(j, i)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def narayana_shift_check(nu) -> bool:
    return narayana_shift(narayana_counts(nu)) == sch_counts(nu)


def total_small(nu) -> int:
    return sum(sch_counts(nu))


def narayana_at(nu, x: int) -> int:
    return sum(c * x**i for i, c in enumerate(narayana_counts(nu)))


def euler_alternating(nu) -> int:
    return sum((-1) ** i * c for i, c in enumerate(sch_counts(nu)))


class DoublingCheck(NamedTuple):
    large: int
    small: int
    equality: bool


def doubling_check(nu) -> DoublingCheck:
    small = total_small(nu)
    large = sum(large_counts(nu))
    return DoublingCheck(large, small, large == 2 * small)


# -- rational (a, b) closed forms -------------------------------------------


def _coprime(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise DomainError(f"need positive a, b (got {a}, {b})")
    if gcd(a, b) != 1:
        raise DomainError(f"closed forms need coprime a, b (got {a}, {b})")


def _binom(n: int, k: int) -> int:
    # vanishes outside 0 <= k <= n, matching the convention of the closed forms
    return comb(n, k) if 0 <= k <= n else 0


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


def rational_catalan(a: int, b: int) -> int:
    _coprime(a, b)
    return _exact(_binom(a + b, a), a + b)


def rational_narayana(a: int, b: int, i: int) -> int:
    """Number of rational (a,b)-Dyck paths with i peaks."""
    _coprime(a, b)
    if not 0 <= i <= a:
        raise DomainError(f"i={i} outside 0..{a}")
    return _exact(_binom(a, i) * _binom(b - 1, b - i), a)


def rational_large_count(a: int, b: int, i: int) -> int:
    _coprime(a, b)
    if not 0 <= i <= a:
        raise DomainError(f"i={i} outside 0..{a}")
    return _exact(_binom(a, i) * _binom(a + b - 1 - i, b - i), a)


def rational_large_count_swapped(a: int, b: int, i: int) -> int:
    """The same number through the form with the roles of a and b exchanged."""
    _coprime(a, b)
    if not 0 <= i <= a:
        raise DomainError(f"i={i} outside 0..{a}")
    return _exact(_binom(b, i) * _binom(a + b - 1 - i, a - i), b)


def rational_small_count(a: int, b: int, i: int) -> int:
    _coprime(a, b)
    if not 0 <= i <= a - 1:
        raise DomainError(f"i={i} outside 0..{a - 1}")
    return _exact(_binom(b - 1, i) * _binom(a + b - 1 - i, b), a)


def rational_small_count_swapped(a: int, b: int, i: int) -> int:
    _coprime(a, b)
    if not 0 <= i <= a - 1:
        raise DomainError(f"i={i} outside 0..{a - 1}")
    return _exact(_binom(a - 1, i) * _binom(a + b - 1 - i, a), b)


def rational_report(a: int, b: int) -> dict:
    """All four closed-form families next to the enumerated counts."""
    nu = rational_base(a, b)
    sch = sch_counts(nu)
    large = large_counts(nu)
    nar = narayana_counts(nu)
    pad = lambda v, n: list(v) + [0] * (n - len(v))  # noqa: E731
    formulas = {
        "catalan": rational_catalan(a, b),
        "narayana": [rational_narayana(a, b, i) for i in range(a + 1)],
        "large": [rational_large_count(a, b, i) for i in range(a + 1)],
        "small": [rational_small_count(a, b, i) for i in range(a)],
    }
    enumerated = {
        "catalan": len(enum_dyck(nu)),
        # peaks = valleys + 1 because rational base paths start N and end E
        "narayana": [0] + pad(nar, a),
        "large": pad(large, a + 1),
        "small": pad(sch, a),
    }
    return {
        "a": a,
        "b": b,
        "nu": str(nu),
        "formula": formulas,
        "enumerated": enumerated,
        "agree": formulas == enumerated,
    }
