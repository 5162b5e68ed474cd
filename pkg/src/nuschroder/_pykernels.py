"""Pure-Python enumeration and counting kernels.

Both kernels walk the grid from (0,0) to (b,a).  A column ``x`` admits an
east step starting at height ``y`` iff ``y >= min_e[x]`` and a diagonal step
iff ``y >= min_d[x]``.  With every ``min_e[x] <= a`` each partial path can be
completed, so the depth-first search never backtracks out of a dead end.
"""


def enum_words(a, b, min_e, min_d):
    """All admissible words in lexicographic order (D < E < N)."""
    out = []
    buf = []

    def rec(x, y):
        if x == b and y == a:
            out.append("".join(buf))
            return
        if x < b:
            if y < a and y >= min_d[x]:
                buf.append("D")
                rec(x + 1, y + 1)
                buf.pop()
            if y >= min_e[x]:
                buf.append("E")
                rec(x + 1, y)
                buf.pop()
        if y < a:
            buf.append("N")
            rec(x, y + 1)
            buf.pop()

    rec(0, 0)
    return out


def count_by_diag(a, b, min_e, min_d):
    """Number of admissible words grouped by their number of D steps."""
    # poly[x][y]: coefficient list of completions from (x, y)
    poly = [[None] * (a + 1) for _ in range(b + 1)]
    for x in range(b, -1, -1):
        for y in range(a, -1, -1):
            if x == b and y == a:
                poly[x][y] = [1]
                continue
            acc = []
            if y < a:
                _add(acc, poly[x][y + 1], 0)
            if x < b:
                if y >= min_e[x]:
                    _add(acc, poly[x + 1][y], 0)
                if y < a and y >= min_d[x]:
                    _add(acc, poly[x + 1][y + 1], 1)
            poly[x][y] = acc
    result = poly[0][0]
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return result


def _add(acc, src, shift):
    need = len(src) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for i, c in enumerate(src):
        acc[i + shift] += c
