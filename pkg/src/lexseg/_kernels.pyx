# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot-path kernels: divisibility, minimalization, GF(p) rank.

Mirrors _kernels_py; lexseg.kernels picks whichever imports.
"""

from libc.stdlib cimport malloc, free


def divides(tuple a, tuple b):
    """True iff the monomial a divides b (componentwise a <= b)."""
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long> a[i] > <long> b[i]:
            return False
    return True


def member(tuple m, tuple gens):
    """True iff some generator in gens divides m."""
    cdef Py_ssize_t i, k = len(gens)
    for i in range(k):
        if divides(<tuple> gens[i], m):
            return True
    return False


def minimalize(gens):
    """Canonical generator tuple: drop non-minimal gens, sort lex-descending."""
    cdef list uniq = sorted(set(gens))
    cdef list keep = []
    cdef Py_ssize_t i, j, k = len(uniq)
    cdef bint redundant
    for i in range(k):
        redundant = False
        for j in range(k):
            if i != j and divides(<tuple> uniq[j], <tuple> uniq[i]):
                redundant = True
                break
        if not redundant:
            keep.append(uniq[i])
    keep.sort(reverse=True)
    return tuple(keep)


def colon_gens(gens, tuple w):
    """Generators of (I : w) for I given by gens, minimalized."""
    cdef list quots = []
    cdef Py_ssize_t i, n = len(w)
    cdef long q
    for g in gens:
        row = []
        for i in range(n):
            q = <long> (<tuple> g)[i] - <long> w[i]
            row.append(q if q > 0 else 0)
        quots.append(tuple(row))
    return minimalize(quots)


def gf_rank(rows, long p):
    """Rank of an integer matrix over GF(p); rows is a list of lists."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(rows[0])
    if ncols == 0:
        return 0
    cdef long *mat = <long *> malloc(nrows * ncols * sizeof(long))
    if mat == NULL:
        raise MemoryError()
    cdef Py_ssize_t r, c, col, row, pivot
    cdef long inv, coef, x
    try:
        for r in range(nrows):
            rowlist = rows[r]
            for c in range(ncols):
                x = <long> rowlist[c] % p
                if x < 0:
                    x += p
                mat[r * ncols + c] = x
        row = 0
        for col in range(ncols):
            pivot = -1
            for r in range(row, nrows):
                if mat[r * ncols + col] != 0:
                    pivot = r
                    break
            if pivot < 0:
                continue
            if pivot != row:
                for c in range(ncols):
                    x = mat[row * ncols + c]
                    mat[row * ncols + c] = mat[pivot * ncols + c]
                    mat[pivot * ncols + c] = x
            inv = _inverse_mod(mat[row * ncols + col], p)
            for c in range(ncols):
                mat[row * ncols + c] = (mat[row * ncols + c] * inv) % p
            for r in range(nrows):
                if r != row and mat[r * ncols + col] != 0:
                    coef = mat[r * ncols + col]
                    for c in range(ncols):
                        mat[r * ncols + c] = (
                            mat[r * ncols + c] - coef * mat[row * ncols + c]
                        ) % p
                        if mat[r * ncols + c] < 0:
                            mat[r * ncols + c] += p
            row += 1
            if row == nrows:
                break
        return row
    finally:
        free(mat)


cdef long _inverse_mod(long a, long p):
    # Fermat; p is prime and a != 0 mod p.
    cdef long result = 1
    cdef long base = a % p
    cdef long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result
