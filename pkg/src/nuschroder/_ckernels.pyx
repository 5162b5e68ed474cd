# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_pykernels``; identical contracts."""

from libc.stdlib cimport malloc, free


cdef void _rec(int x, int y, int a, int b, int* min_e, int* min_d,
               char* buf, int depth, list out):
    if x == b and y == a:
        out.append(buf[:depth].decode("ascii"))
        return
    if x < b:
        if y < a and y >= min_d[x]:
            buf[depth] = 68  # 'D'
            _rec(x + 1, y + 1, a, b, min_e, min_d, buf, depth + 1, out)
        if y >= min_e[x]:
            buf[depth] = 69  # 'E'
            _rec(x + 1, y, a, b, min_e, min_d, buf, depth + 1, out)
    if y < a:
        buf[depth] = 78  # 'N'
        _rec(x, y + 1, a, b, min_e, min_d, buf, depth + 1, out)


def enum_words(int a, int b, min_e, min_d):
    cdef int n = max(b, 1)
    cdef int* ce = <int*> malloc(n * sizeof(int))
    cdef int* cd = <int*> malloc(n * sizeof(int))
    cdef char* buf = <char*> malloc(a + b + 1)
    cdef int i
    cdef list out = []
    if ce == NULL or cd == NULL or buf == NULL:
        free(ce); free(cd); free(buf)
        raise MemoryError()
    try:
        for i in range(b):
            ce[i] = min_e[i]
            cd[i] = min_d[i]
        _rec(0, 0, a, b, ce, cd, buf, 0, out)
    finally:
        free(ce)
        free(cd)
        free(buf)
    return out


def count_by_diag(int a, int b, min_e, min_d):
    # Python ints keep the counts exact; only the loop skeleton is compiled.
    cdef int x, y, i, shift
    cdef list poly = [[None] * (a + 1) for _ in range(b + 1)]
    cdef list acc, src
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
    cdef list result = poly[0][0]
    while len(result) > 1 and result[len(result) - 1] == 0:
        result.pop()
    return result


cdef inline void _add(list acc, list src, int shift):
    cdef Py_ssize_t need = len(src) + shift
    cdef Py_ssize_t i
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for i in range(len(src)):
        acc[i + shift] += src[i]
