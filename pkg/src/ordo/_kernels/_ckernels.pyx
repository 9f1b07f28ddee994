# cython: language_level=3
"""Compiled kernels. Mirrors ``_pykernels`` exactly."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t, int64_t


def closure(rows, Py_ssize_t n):
    if n <= 64:
        return _closure_words(rows, n)
    cdef Py_ssize_t i, j, k
    cdef unsigned char *m = <unsigned char *> malloc(n * n)
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            r = rows[i]
            for j in range(n):
                m[i * n + j] = (r >> j) & 1
        for k in range(n):
            for i in range(n):
                if m[i * n + k]:
                    for j in range(n):
                        if m[k * n + j]:
                            m[i * n + j] = 1
        out = []
        for i in range(n):
            r = 0
            for j in range(n):
                if j != i and m[i * n + j]:
                    r |= (<object> 1) << j
            out.append(r)
        return out
    finally:
        free(m)


cdef list _closure_words(rows, Py_ssize_t n):
    # one machine word per row
    cdef Py_ssize_t i, k
    cdef uint64_t bit, row_k
    cdef uint64_t w[64]
    for i in range(n):
        w[i] = rows[i]
    for k in range(n):
        bit = (<uint64_t> 1) << k
        row_k = w[k]
        for i in range(n):
            if w[i] & bit:
                w[i] |= row_k
    return [w[i] & ~((<uint64_t> 1) << i) for i in range(n)]


def widest_paths(weights, Py_ssize_t n):
    cdef Py_ssize_t i, j, k
    cdef int64_t via, w
    cdef int64_t *p = <int64_t *> malloc((n * n if n else 1) * sizeof(int64_t))
    if p == NULL:
        raise MemoryError()
    try:
        for i in range(n * n):
            p[i] = weights[i]
        for i in range(n):
            p[i * n + i] = 0
        for k in range(n):
            for i in range(n):
                if i == k:
                    continue
                via = p[i * n + k]
                if via == 0:
                    continue
                for j in range(n):
                    if j == i or j == k:
                        continue
                    w = p[k * n + j]
                    if w > via:
                        w = via
                    if w > p[i * n + j]:
                        p[i * n + j] = w
        return [p[i] for i in range(n * n)]
    finally:
        free(p)


def count_extensions(preds, Py_ssize_t n):
    if n > 20:
        raise ValueError("count_extensions supports at most 20 elements")
    cdef uint64_t size = (<uint64_t> 1) << n
    cdef uint64_t mask, bit, c
    cdef Py_ssize_t i
    cdef uint64_t pr[20]
    for i in range(n):
        pr[i] = preds[i]
    cdef uint64_t *cnt = <uint64_t *> malloc(size * sizeof(uint64_t))
    if cnt == NULL:
        raise MemoryError()
    try:
        for mask in range(size):
            cnt[mask] = 0
        cnt[0] = 1
        for mask in range(size):
            c = cnt[mask]
            if c == 0:
                continue
            for i in range(n):
                bit = (<uint64_t> 1) << i
                if (mask & bit) == 0 and (pr[i] & ~mask) == 0:
                    cnt[mask | bit] += c
        return cnt[size - 1]
    finally:
        free(cnt)


def kemeny_table(counts, Py_ssize_t n):
    if n > 20:
        raise ValueError("kemeny_table supports at most 20 elements")
    cdef uint64_t size = (<uint64_t> 1) << n
    cdef uint64_t s, rest
    cdef Py_ssize_t x, y
    cdef int64_t best, gain, total
    cdef int64_t *c = <int64_t *> malloc((n * n if n else 1) * sizeof(int64_t))
    cdef int64_t *table = <int64_t *> malloc(size * sizeof(int64_t))
    if c == NULL or table == NULL:
        free(c)
        free(table)
        raise MemoryError()
    try:
        for x in range(n * n):
            c[x] = counts[x]
        table[0] = 0
        for s in range(1, size):
            best = -1
            for x in range(n):
                if not (s >> x) & 1:
                    continue
                rest = s & ~((<uint64_t> 1) << x)
                gain = 0
                for y in range(n):
                    if (rest >> y) & 1:
                        gain += c[x * n + y]
                total = gain + table[rest]
                if total > best:
                    best = total
            table[s] = best
        return [table[s] for s in range(size)]
    finally:
        free(c)
        free(table)
