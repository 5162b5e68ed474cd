"""Step words, base paths and the geometric predicates on them.

A path is a word over ``N`` (0,1), ``E`` (1,0) and ``D`` (1,1) starting at the
origin.  Heights are compared through a *doubled* height profile sampled at
every half-integer abscissa, so that diagonal steps never force floating
point arithmetic.
"""
from __future__ import annotations

from itertools import product
from typing import NamedTuple, Sequence

STEPS = {"N": (0, 1), "E": (1, 0), "D": (1, 1)}


class ParseError(ValueError):
    """Raised for malformed step words or base-path specifiers."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class DomainError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class Point(NamedTuple):
    x: int
    y: int


def parse_word(text: str) -> "StepWord":
    """Parse ``text`` into a :class:`StepWord` (case-insensitive).

    The reported position is 1-based.
    """
    upper = text.upper()
    for pos, ch in enumerate(upper, start=1):
        if ch not in STEPS:
            raise ParseError(f"invalid step {text[pos - 1]!r} at position {pos}", pos)
    return str.__new__(StepWord, upper)


class StepWord(str):
    """An immutable word over N/E/D.  ``a`` is its height, ``b`` its width."""

    __slots__ = ()

    def __new__(cls, text: str = ""):
        if isinstance(text, cls):
            return text
        word = parse_word(text)
        return str.__new__(cls, word)

    @property
    def a(self) -> int:
        return self.count("N") + self.count("D")

    @property
    def b(self) -> int:
        return self.count("E") + self.count("D")

    @property
    def end(self) -> Point:
        return Point(self.b, self.a)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class BasePath(StepWord):
    """A step word without diagonal steps; plays the role of ``nu``."""

    __slots__ = ()

    def __new__(cls, text: str = ""):
        if isinstance(text, cls):
            return text
        word = parse_word(text)
        if "D" in word:
            raise DomainError(f"base path {word!r} contains a diagonal step")
        return str.__new__(cls, word)


def as_word(w) -> StepWord:
    return w if isinstance(w, StepWord) else StepWord(w)


def as_base(nu) -> BasePath:
    return nu if isinstance(nu, BasePath) else BasePath(nu)


def rational_base(a: int, b: int) -> BasePath:
    """Lowest N/E path from (0,0) to (b,a) weakly above the segment to (b,a)."""
    if a < 1 or b < 1:
        raise DomainError(f"rational base path needs a, b >= 1 (got a={a}, b={b})")
    out = []
    y = 0
    for k in range(b):
        # east step over column k sits at height ceil((k+1)a/b)
        target = -((-(k + 1) * a) // b)
        out.append("N" * (target - y))
        out.append("E")
        y = target
    return BasePath("".join(out))


def parse_nu(spec: str) -> BasePath:
    """Accept either a raw N/E word or the rational shorthand ``"a/b"``."""
    spec = spec.strip()
    if "/" in spec:
        left, _, right = spec.partition("/")
        try:
            a, b = int(left), int(right)
        except ValueError:
            raise ParseError(f"bad rational specifier {spec!r}") from None
        return rational_base(a, b)
    return BasePath(spec)


def lattice_points(w) -> list[Point]:
    """The len(w)+1 lattice points visited by ``w`` in order."""
    x = y = 0
    pts = [Point(0, 0)]
    for s in w:
        dx, dy = STEPS[s]
        x += dx
        y += dy
        pts.append(Point(x, y))
    return pts


def height_profile(w) -> tuple[int, ...]:
    """Doubled heights at abscissae 0, 1/2, 1, ..., b.

    At an integer abscissa the sample is the top of the vertical run there
    (the height at which the path leaves that vertical line).
    """
    w = as_word(w)
    samples = []
    y = 0
    for s in w:
        if s == "N":
            y += 1
            continue
        samples.append(2 * y)
        if s == "E":
            samples.append(2 * y)
        else:
            samples.append(2 * y + 1)
            y += 1
    samples.append(2 * y)
    return tuple(samples)


def _check_endpoints(u: StepWord, v: StepWord) -> None:
    if u.end != v.end:
        raise DomainError(f"paths {u!r} and {v!r} have different endpoints")


def weakly_above(upper, lower) -> bool:
    upper, lower = as_word(upper), as_word(lower)
    _check_endpoints(upper, lower)
    return all(p >= q for p, q in zip(height_profile(upper), height_profile(lower)))


def large_base(nu) -> StepWord:
    """``nu`` with each peak (consecutive NE) replaced by a diagonal step."""
    nu = as_base(nu)
    return StepWord(nu.replace("NE", "D"))


def is_small(w, nu) -> bool:
    return weakly_above(w, as_base(nu))


def is_large(w, nu) -> bool:
    return weakly_above(w, large_base(nu))


def peaks(w) -> list[Point]:
    """Apex of every consecutive NE pair, left to right."""
    pts = lattice_points(w)
    return [pts[i + 1] for i in range(len(w) - 1) if w[i] == "N" and w[i + 1] == "E"]


def valleys(w) -> list[Point]:
    """Corner of every consecutive EN pair, left to right."""
    pts = lattice_points(w)
    return [pts[i + 1] for i in range(len(w) - 1) if w[i] == "E" and w[i + 1] == "N"]


def column_heights(nu) -> list[int]:
    """Height of the east step of ``nu`` over each column 0..b-1."""
    heights = []
    y = 0
    for s in as_base(nu):
        if s == "N":
            y += 1
        else:
            heights.append(y)
    return heights


def run_bounds(nu) -> tuple[list[int], list[int]]:
    """Bottom and top of the vertical run of ``nu`` on each line x = 0..b."""
    nu = as_base(nu)
    e = column_heights(nu)
    lo = [0] + e
    hi = e + [nu.a]
    return lo, hi


def in_region(nu, p) -> bool:
    """Whether lattice point ``p`` lies in R_nu (rectangle, weakly above nu)."""
    nu = as_base(nu)
    x, y = p
    if not (0 <= x <= nu.b and 0 <= y <= nu.a):
        return False
    lo, _ = run_bounds(nu)
    return y >= lo[x]


def strictly_above(nu, p) -> bool:
    nu = as_base(nu)
    x, y = p
    if not (0 <= x <= nu.b and 0 <= y <= nu.a):
        return False
    _, hi = run_bounds(nu)
    return y > hi[x]


def is_dyck(w, nu) -> bool:
    w = as_word(w)
    return "D" not in w and w.end == as_base(nu).end and is_small(w, nu)


def high_peaks(d, nu) -> list[Point]:
    nu = as_base(nu)
    d = as_word(d)
    if not is_dyck(d, nu):
        raise DomainError(f"{d!r} is not a Dyck path over {nu!r}")
    return [p for p in peaks(d) if strictly_above(nu, p)]


def diagonal_squares(nu) -> list[Point]:
    """Lower-left corners of the squares just below the peaks of ``nu``."""
    return [Point(x, y - 1) for x, y in peaks(as_base(nu))]


def area2(w, nu) -> int:
    """Twice the area enclosed between ``w`` and ``nu``.

    Defined for large paths; a diagonal step lying on the nu-diagonal
    contributes its half square too.
    """
    w, nu = as_word(w), as_base(nu)
    if not is_large(w, nu):
        raise DomainError(f"{w!r} is not a large path over {nu!r}")
    e = column_heights(nu)
    total = 0
    x = y = 0
    for s in w:
        if s == "N":
            y += 1
            continue
        gap = 2 * (y - e[x]) + (1 if s == "D" else 0)
        total += abs(gap)
        x += 1
        if s == "D":
            y += 1
    return total


def horiz(nu, p) -> int:
    """Number of east steps that fit from ``p`` without dropping below ``nu``."""
    nu = as_base(nu)
    if not in_region(nu, p):
        raise DomainError(f"point {tuple(p)} is not weakly above {nu!r}")
    x, y = p
    e = column_heights(nu)
    k = 0
    while x + k < nu.b and e[x + k] <= y:
        k += 1
    return k


def diag_count(w) -> int:
    return as_word(w).count("D")


def all_words(length: int, alphabet: Sequence[str] = "EN"):
    """Every word of the given length over ``alphabet`` in lexicographic order."""
    for tup in product(sorted(alphabet), repeat=length):
        yield "".join(tup)


def all_bases(max_len: int, min_len: int = 0):
    """Every N/E base path with min_len <= length <= max_len."""
    for n in range(min_len, max_len + 1):
        for w in all_words(n):
            yield BasePath(w)
