# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel: fraction-free Gauss-Jordan elimination over the integers.

Twin of ``_rref_py.rref_int``; the algorithm and output are identical, only
loop overhead differs (entries are arbitrary-precision Python ints either way).
"""


def rref_int(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t t = 0, c, r, j, sel
    cdef list pivots = []
    cdef list piv_row, row
    prev = 1
    for c in range(ncols):
        sel = -1
        for r in range(t, nrows):
            if (<list>rows[r])[c] != 0:
                sel = r
                break
        if sel < 0:
            continue
        if sel != t:
            rows[sel], rows[t] = rows[t], rows[sel]
        piv_row = <list>rows[t]
        p = piv_row[c]
        for r in range(nrows):
            if r == t:
                continue
            row = <list>rows[r]
            f = row[c]
            if f == 0:
                if p != prev:
                    for j in range(ncols):
                        if row[j]:
                            row[j] = row[j] * p // prev
                continue
            for j in range(ncols):
                row[j] = (row[j] * p - f * piv_row[j]) // prev
        prev = p
        pivots.append(c)
        t += 1
    return pivots, prev
