# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels; see ``_pykernels`` for the reference versions.

All arithmetic is in 64-bit integers.  The dispatcher in ``kernels`` only
routes inputs here after checking they cannot overflow.
"""
from libc.stdlib cimport malloc, free, qsort


def triangle_count(long long A, long long B, long long p, long long q, int side):
    cdef long long rhs = q * A + p * B
    cdef long long total = 0
    cdef long long y, rem
    cdef long long top = rhs // p
    for y in range(top + 1):
        rem = rhs - p * y
        total += rem // q + 1
        if side != 0 and rem % q == 0:
            if (side < 0 and y < B) or (side > 0 and y > B):
                total -= 1
    return total


cdef void _search(long long s, long long sq, long long top, int depth,
                  long long* prefix, list out):
    cdef long long x, s2, sq2, hi
    if s == 0:
        if sq == 0:
            out.append(tuple([prefix[i] for i in range(depth)]))
        return
    hi = top if top < s else s
    x = hi
    while x > 0:
        s2 = s - x
        sq2 = sq - x * x
        if sq2 >= s2:
            if (s2 // x) * x * x + (s2 % x) * (s2 % x) < sq2:
                break
            prefix[depth] = x
            _search(s2, sq2, x, depth + 1, prefix, out)
        x -= 1


def diophantine_parts(long long d, long long cap):
    cdef long long target_sum = 3 * d - 1
    cdef list out = []
    cdef long long* prefix
    if target_sum <= 0:
        return out
    prefix = <long long*> malloc((target_sum + 1) * sizeof(long long))
    if prefix == NULL:
        raise MemoryError()
    try:
        _search(target_sum, d * d + 1, cap, 0, prefix, out)
    finally:
        free(prefix)
    return out


cdef int _cmp_ll(const void* a, const void* b) noexcept nogil:
    cdef long long x = (<long long*> a)[0]
    cdef long long y = (<long long*> b)[0]
    return (x > y) - (x < y)


cdef long long _count_upto(long long p, long long q, long long bound):
    cdef long long m, total = 0
    for m in range(bound // p + 1):
        total += (bound - m * p) // q + 1
    return total


def diagonal_ratio_max(long long p, long long q, long long count):
    cdef long long bound = p if p > q else q
    cdef long long n, m, v, k, j, threshold, idx
    cdef long long best_num = 0, best_den = 1
    cdef long long* values
    while _count_upto(p, q, bound) < count + 1:
        bound *= 2
    n = _count_upto(p, q, bound)
    values = <long long*> malloc(n * sizeof(long long))
    if values == NULL:
        raise MemoryError()
    try:
        idx = 0
        for m in range(bound // p + 1):
            v = m * p
            while v <= bound:
                values[idx] = v
                idx += 1
                v += q
        qsort(values, n, sizeof(long long), _cmp_ll)
        j = 1
        threshold = 2
        for k in range(1, count + 1):
            while threshold < k:
                j += 1
                threshold = (j + 1) * (j + 2) // 2 - 1
            v = values[k]
            if v * best_den > best_num * q * j:
                best_num = v
                best_den = q * j
    finally:
        free(values)
    return best_num, best_den
