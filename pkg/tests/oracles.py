"""Brute-force oracles shared by the test modules.

They deliberately avoid the package's own predicates: paths are compared as
piecewise-linear functions sampled inside every column, and candidate words
come from a plain product over the alphabet.
"""
from fractions import Fraction
from itertools import product

from nuschroder.paths import BasePath

QUARTERS = (Fraction(1, 4), Fraction(3, 4))


def words_to(a, b, alphabet="DEN"):
    """Every word over ``alphabet`` ending at (b, a), by filtering a product."""
    out = []
    for n in range(max(a, b), a + b + 1):
        for tup in product(alphabet, repeat=n):
            ns = tup.count("N")
            es = tup.count("E")
            ds = tup.count("D")
            if ns + ds == a and es + ds == b:
                out.append("".join(tup))
    return sorted(out)


def column_profile(word):
    """For each column c, a function t -> height of the path at x = c + t."""
    y = 0
    cols = []
    for s in word:
        if s == "N":
            y += 1
        elif s == "E":
            cols.append(lambda t, y=y: Fraction(y))
        else:
            cols.append(lambda t, y=y: y + t)
            y += 1
    return cols


def above(upper, lower):
    cu, cl = column_profile(upper), column_profile(lower)
    return all(cu[c](t) >= cl[c](t) for c in range(len(cu)) for t in QUARTERS)


def lowered(nu):
    return nu.replace("NE", "D")


def small_oracle(nu):
    return [w for w in words_to(nu.count("N"), nu.count("E")) if above(w, nu)]


def large_oracle(nu):
    return [w for w in words_to(nu.count("N"), nu.count("E")) if above(w, lowered(nu))]


def dyck_oracle(nu):
    return [w for w in words_to(nu.count("N"), nu.count("E"), "EN") if above(w, nu)]


def area_oracle(word, nu):
    """Twice the area between two paths by the midpoint rule (exact on lines)."""
    cw, cn = column_profile(word), column_profile(nu)
    half = Fraction(1, 2)
    total = sum(abs(cw[c](half) - cn[c](half)) for c in range(len(cw)))
    return int(2 * total)


def bases_up_to(n):
    return [BasePath("".join(t)) for k in range(n + 1) for t in product("EN", repeat=k)]


# flushing example: base path in a 7 x 6 grid, a small path and its tree
FLUSH_NU = BasePath("NENEENEENNENE")
FLUSH_PATH = "NNEDNDENEEE"
FLUSH_NODES = {
    (0, 0), (1, 1), (2, 2), (3, 2), (5, 3), (5, 4),
    (4, 5), (6, 5), (0, 6), (1, 6), (4, 6), (7, 6),
}

# nine-node binary tree and seven-node tree over nu(3,5)
LEFT_TREE = [(0, 3), (0, 0), (0, 1), (1, 1), (2, 3), (2, 2), (4, 3), (5, 3), (3, 2)]
RIGHT_TREE = [(0, 3), (0, 0), (1, 1), (2, 3), (4, 3), (5, 3), (3, 2)]
# a tree before and after the diagonal contraction at (1, 2)
DIAG_BEFORE = [(0, 3), (0, 0), (1, 1), (1, 2), (2, 2), (4, 3), (5, 3), (3, 2)]
DIAG_AFTER = [(0, 3), (0, 0), (1, 1), (2, 2), (4, 3), (5, 3), (3, 2)]

# the eight-arc covering forest over nu(3,5), and its tree
FOREST_ARCS = [(1, 2), (1, 7), (1, 10), (3, 4), (5, 7), (6, 7), (8, 10), (9, 10)]
FOREST_NODES = {(0, 0), (0, 2), (0, 3), (1, 1), (2, 2), (3, 2), (4, 3), (5, 3)}
