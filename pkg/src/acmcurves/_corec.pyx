# cython: language_level=3
# Compiled twin of _corepy: identical contracts, tighter loops.
# Coefficients stay Python ints (arbitrary precision is not negotiable);
# the win is loop and dispatch overhead, not machine-word arithmetic.

from math import gcd


def normalize(nums, den):
    cdef Py_ssize_t i, n = len(nums)
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for i in range(n):
        g = gcd(g, nums[i])
        if g == 1:
            return tuple(nums), den
    return tuple([nums[i] // g for i in range(n)]), den // g


def add(anums, aden, bnums, bden):
    cdef Py_ssize_t i, n = len(anums)
    cdef list out = [0] * n
    if aden == bden:
        for i in range(n):
            out[i] = anums[i] + bnums[i]
        return normalize(out, aden)
    for i in range(n):
        out[i] = anums[i] * bden + bnums[i] * aden
    return normalize(out, aden * bden)


def sub(anums, aden, bnums, bden):
    cdef Py_ssize_t i, n = len(anums)
    cdef list out = [0] * n
    if aden == bden:
        for i in range(n):
            out[i] = anums[i] - bnums[i]
        return normalize(out, aden)
    for i in range(n):
        out[i] = anums[i] * bden - bnums[i] * aden
    return normalize(out, aden * bden)


def mul(anums, aden, bnums, bden, red_rows):
    cdef Py_ssize_t i, j, phi = len(anums)
    cdef list conv = [0] * (2 * phi - 1)
    for i in range(phi):
        x = anums[i]
        if x:
            for j in range(phi):
                y = bnums[j]
                if y:
                    conv[i + j] = conv[i + j] + x * y
    cdef list out = conv[:phi]
    for j in range(phi - 1):
        t = conv[phi + j]
        if t:
            row = red_rows[j]
            for i in range(phi):
                c = row[i]
                if c:
                    out[i] = out[i] + t * c
    return normalize(out, aden * bden)
