# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: initializedcheck=False
"""Compiled kernels: window enumeration and gloss-overlap scoring.

Twin of _pykernels.py; keep the arithmetic and tie handling in lockstep
(same accumulation order, same strict comparisons) so both backends are
bit-identical. Hot loops run without the GIL so window workers really do
overlap.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

import numpy as np


def enumerate_topc(counts, pair_base, pair_flat, int c):
    """See _pykernels.enumerate_topc; identical contract and results."""
    cdef int[::1] cnt = np.ascontiguousarray(counts, dtype=np.int32)
    cdef long long[::1] base = np.ascontiguousarray(pair_base, dtype=np.int64)
    cdef double[::1] flat = np.ascontiguousarray(pair_flat, dtype=np.float64)
    cdef int n = cnt.shape[0]
    if n == 0:
        return [], [], 0

    cdef int* digits = <int*> malloc(n * sizeof(int))
    cdef double* partial = <double*> malloc(n * sizeof(double))
    cdef double* best_scores = <double*> malloc(c * sizeof(double))
    cdef int* best_digits = <int*> malloc(<size_t> c * n * sizeof(int))
    if digits == NULL or partial == NULL or best_scores == NULL or best_digits == NULL:
        free(digits); free(partial); free(best_scores); free(best_digits)
        raise MemoryError()

    cdef int size = 0
    cdef long long enumerated = 0
    cdef int lowest_changed = 0
    cdef int t, p, dt, ct, idx, m, x, new_size
    cdef double acc, score

    memset(digits, 0, n * sizeof(int))

    with nogil:
        while True:
            for t in range(lowest_changed, n):
                acc = partial[t - 1] if t > 0 else 0.0
                dt = digits[t]
                ct = cnt[t]
                for p in range(t):
                    acc += flat[base[p * n + t] + digits[p] * ct + dt]
                partial[t] = acc
            score = partial[n - 1]
            enumerated += 1

            if size < c or score > best_scores[size - 1]:
                idx = size
                while idx > 0 and best_scores[idx - 1] < score:
                    idx -= 1
                new_size = size + 1 if size < c else c
                for m in range(new_size - 1, idx, -1):
                    best_scores[m] = best_scores[m - 1]
                    for x in range(n):
                        best_digits[m * n + x] = best_digits[(m - 1) * n + x]
                best_scores[idx] = score
                for x in range(n):
                    best_digits[idx * n + x] = digits[x]
                size = new_size

            t = n - 1
            while t >= 0 and digits[t] == cnt[t] - 1:
                digits[t] = 0
                t -= 1
            if t < 0:
                break
            digits[t] += 1
            lowest_changed = t

    out_digits = []
    out_scores = []
    for m in range(size):
        out_digits.append(tuple([best_digits[m * n + x] for x in range(n)]))
        out_scores.append(best_scores[m])
    free(digits); free(partial); free(best_scores); free(best_digits)
    return out_digits, out_scores, enumerated


def lesk_overlap_ids(seq_a, seq_b):
    """See _pykernels.lesk_overlap_ids; identical contract and results."""
    a_list = list(seq_a)
    b_list = list(seq_b)
    cdef int na = len(a_list)
    cdef int nb = len(b_list)
    if na == 0 or nb == 0:
        return 0

    cdef long long* a = <long long*> malloc(na * sizeof(long long))
    cdef long long* b = <long long*> malloc(nb * sizeof(long long))
    cdef int* prev = <int*> malloc(nb * sizeof(int))
    cdef int* cur = <int*> malloc(nb * sizeof(int))
    if a == NULL or b == NULL or prev == NULL or cur == NULL:
        free(a); free(b); free(prev); free(cur)
        raise MemoryError()

    cdef int i
    for i in range(na):
        a[i] = a_list[i]
    for i in range(nb):
        b[i] = b_list[i]

    cdef long long total = 0
    cdef long long next_marker = -1
    cdef long long av
    cdef int j, v, best, end_a, end_b, start, tmp_n
    cdef int* swap

    with nogil:
        while na > 0 and nb > 0:
            best = 0
            end_a = -1
            end_b = -1
            memset(prev, 0, nb * sizeof(int))
            for i in range(na):
                memset(cur, 0, nb * sizeof(int))
                av = a[i]
                for j in range(nb):
                    if av == b[j]:
                        v = prev[j - 1] + 1 if j > 0 else 1
                        cur[j] = v
                        if v > best:
                            best = v
                            end_a = i
                            end_b = j
                swap = prev
                prev = cur
                cur = swap
            if best == 0:
                break
            total += <long long> best * best

            start = end_a - best + 1
            a[start] = next_marker
            for i in range(end_a + 1, na):
                a[start + 1 + i - end_a - 1] = a[i]
            na -= best - 1

            start = end_b - best + 1
            b[start] = next_marker - 1
            for j in range(end_b + 1, nb):
                b[start + 1 + j - end_b - 1] = b[j]
            nb -= best - 1

            next_marker -= 2

    free(a); free(b); free(prev); free(cur)
    return total
