# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled LR skew tableau enumerator.

Same contract and traversal order as ``_lrkernel_py.lr_fillings``.
"""

from libc.stdlib cimport malloc, free


def lr_fillings(outer, inner, int max_entry):
    cdef int rows = len(outer)
    cdef int width, ncells, k, r, c, v, lo, hi, top, i
    inner = tuple(inner) + (0,) * (rows - len(inner))
    ncells = 0
    for r in range(rows):
        ncells += outer[r] - inner[r]
    result = {}
    if ncells == 0:
        result[()] = 1
        return result
    width = outer[0]

    cdef int *grid = <int *> malloc(rows * width * sizeof(int))
    cdef int *counts = <int *> malloc((rows + 2) * sizeof(int))
    cdef int *crow = <int *> malloc(ncells * sizeof(int))
    cdef int *ccol = <int *> malloc(ncells * sizeof(int))
    cdef int *above = <int *> malloc(ncells * sizeof(int))
    cdef int *right = <int *> malloc(ncells * sizeof(int))
    cdef int *cur = <int *> malloc(ncells * sizeof(int))
    cdef int *hib = <int *> malloc(ncells * sizeof(int))
    if not (grid and counts and crow and ccol and above and right and cur and hib):
        raise MemoryError()
    try:
        for i in range(rows * width):
            grid[i] = 0
        for i in range(rows + 2):
            counts[i] = 0
        k = 0
        for r in range(rows):
            for c in range(outer[r] - 1, inner[r] - 1, -1):
                crow[k] = r
                ccol[k] = c
                above[k] = 1 if (r > 0 and c >= inner[r - 1]) else 0
                right[k] = 1 if c + 1 < outer[r] else 0
                k += 1

        # iterative backtracking; cur[k] holds the last value tried at cell k
        k = 0
        cur[0] = 0
        hib[0] = -1
        while k >= 0:
            r = crow[k]
            c = ccol[k]
            if cur[k] == 0:
                lo = grid[(r - 1) * width + c] + 1 if above[k] else 1
                hi = r + 1
                if max_entry < hi:
                    hi = max_entry
                if right[k] and grid[r * width + c + 1] < hi:
                    hi = grid[r * width + c + 1]
                hib[k] = hi
                v = lo
            else:
                counts[cur[k]] -= 1
                v = cur[k] + 1
            while v <= hib[k] and v > 1 and counts[v] >= counts[v - 1]:
                v += 1
            if v > hib[k]:
                grid[r * width + c] = 0
                cur[k] = 0
                k -= 1
                continue
            cur[k] = v
            grid[r * width + c] = v
            counts[v] += 1
            if k + 1 == ncells:
                top = 1
                while top <= rows and counts[top]:
                    top += 1
                key = tuple([counts[i] for i in range(1, top)])
                result[key] = result.get(key, 0) + 1
                # stay at k; next loop iteration retracts cur[k] and tries v + 1
            else:
                k += 1
                cur[k] = 0
    finally:
        free(grid); free(counts); free(crow); free(ccol)
        free(above); free(right); free(cur); free(hib)
    return result
