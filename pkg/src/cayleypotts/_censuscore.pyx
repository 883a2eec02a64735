# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernel; same contract as _censuspy.census_classes.

Vertices arrive as an int64 value array in canonical (length, lex) order, so
the ball of center i is read off with index arithmetic only.  The loop is
plain C and releases the GIL.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef signed char CLASS_TABLE[5][7]
CLASS_TABLE[4][6] = 1
CLASS_TABLE[3][3] = 2
CLASS_TABLE[2][2] = 3
CLASS_TABLE[1][3] = 4
CLASS_TABLE[0][6] = 5
CLASS_TABLE[1][0] = 6
CLASS_TABLE[0][3] = 7
CLASS_TABLE[0][1] = 8
CLASS_TABLE[2][1] = 9
CLASS_TABLE[1][1] = 10
CLASS_TABLE[0][2] = 11
CLASS_TABLE[0][0] = 12


def census_classes(cnp.int64_t[::1] values, Py_ssize_t n_centers,
                   Py_ssize_t start=0, stop=None):
    cdef Py_ssize_t lo = start
    cdef Py_ssize_t hi = n_centers if stop is None else <Py_ssize_t> stop
    if lo < 0 or hi > n_centers or n_centers > values.shape[0]:
        raise ValueError("center range outside the value array")
    if n_centers > 1 and values.shape[0] < 3 * n_centers + 2:
        raise ValueError("value array too short for the requested centers")
    if n_centers == 1 and values.shape[0] < 5:
        raise ValueError("value array too short for the requested centers")
    out_arr = np.empty(max(hi - lo, 0), dtype=np.int8)
    cdef signed char[::1] out = out_arr
    cdef Py_ssize_t c, base, parent, i, k
    cdef cnp.int64_t center
    cdef cnp.int64_t leaves[4]
    cdef int nc, np_
    with nogil:
        for c in range(lo, hi):
            center = values[c]
            if c == 0:
                leaves[0] = values[1]
                leaves[1] = values[2]
                leaves[2] = values[3]
                leaves[3] = values[4]
            else:
                base = 5 + 3 * (c - 1)
                parent = 0 if c <= 4 else (c - 5) / 3 + 1
                leaves[0] = values[parent]
                leaves[1] = values[base]
                leaves[2] = values[base + 1]
                leaves[3] = values[base + 2]
            nc = 0
            np_ = 0
            for i in range(4):
                if leaves[i] == center:
                    nc += 1
                for k in range(i + 1, 4):
                    if leaves[i] == leaves[k]:
                        np_ += 1
            out[c - lo] = CLASS_TABLE[nc][np_]
    return out_arr
