"""Pure-Python kernels for cyclotomic coefficient arithmetic.

An element is a vector of integer numerators over one positive denominator.
Multiplication convolves the numerators and folds powers of the generator
back below the degree of the minimal polynomial using precomputed integer
reduction rows.  Everything is arbitrary-precision; nothing here may round.
"""

from math import gcd


def normalize(nums, den):
    """Divide out the content and force a positive denominator."""
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for v in nums:
        g = gcd(g, v)
        if g == 1:
            return tuple(nums), den
    return tuple(v // g for v in nums), den // g


def add(anums, aden, bnums, bden):
    if aden == bden:
        return normalize([x + y for x, y in zip(anums, bnums)], aden)
    return normalize(
        [x * bden + y * aden for x, y in zip(anums, bnums)], aden * bden
    )


def sub(anums, aden, bnums, bden):
    if aden == bden:
        return normalize([x - y for x, y in zip(anums, bnums)], aden)
    return normalize(
        [x * bden - y * aden for x, y in zip(anums, bnums)], aden * bden
    )


def mul(anums, aden, bnums, bden, red_rows):
    """Product modulo the minimal polynomial; red_rows[j] is x^(phi+j)."""
    phi = len(anums)
    conv = [0] * (2 * phi - 1)
    for i, x in enumerate(anums):
        if x:
            for j, y in enumerate(bnums):
                if y:
                    conv[i + j] += x * y
    out = conv[:phi]
    for j in range(phi - 1):
        t = conv[phi + j]
        if t:
            row = red_rows[j]
            for i in range(phi):
                c = row[i]
                if c:
                    out[i] += t * c
    return normalize(out, aden * bden)
