"""Exact projective geometry in P^3.

A line is the common zero locus of two independent linear forms.  The
canonical representative is the reduced row echelon form of the 2x4
coefficient matrix over the cyclotomic field, so two lines are equal
exactly when their canonical matrices agree.  Incidence of distinct lines
is decided by the determinant of the stacked 4x4 form matrix: zero means
the lines share a point, nonzero means they are skew.
"""

from dataclasses import dataclass
from enum import Enum
from math import comb, lcm

from .cyclo import _check_order, _coerce, rational


class GeometryError(ValueError):
    pass


def _as_cyc(value):
    got = _coerce(value)
    if got is None:
        raise TypeError(f"expected a cyclotomic or rational coefficient, got {value!r}")
    return got


@dataclass(frozen=True)
class LinearForm:
    """A linear form a0*x0 + a1*x1 + a2*x2 + a3*x3 with exact coefficients."""

    coeffs: tuple

    def __init__(self, coeffs):
        coeffs = tuple(_as_cyc(c) for c in coeffs)
        if len(coeffs) != 4:
            raise GeometryError("a linear form needs exactly 4 coefficients")
        if all(c.is_zero() for c in coeffs):
            raise GeometryError("the zero form does not define a plane")
        object.__setattr__(self, "coeffs", coeffs)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                parts.append(f"({c})*x{i}")
        return " + ".join(parts)


def _rref(rows):
    """Reduced row echelon form with unit pivots; returns (rows, pivot cols)."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(4):
        src = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


class Line:
    """A line in P^3, canonicalized as a rank-2 RREF 2x4 matrix."""

    __slots__ = ("rows", "pivots")

    def __init__(self, f1, f2):
        if not isinstance(f1, LinearForm):
            f1 = LinearForm(f1)
        if not isinstance(f2, LinearForm):
            f2 = LinearForm(f2)
        n = lcm(*(c.order for c in f1.coeffs + f2.coeffs))
        _check_order(n)
        rows, pivots = _rref(
            [
                [c.lift(n) for c in f1.coeffs],
                [c.lift(n) for c in f2.coeffs],
            ]
        )
        if len(pivots) < 2:
            raise GeometryError("the two forms are linearly dependent (rank 1)")
        self.rows = (tuple(rows[0]), tuple(rows[1]))
        self.pivots = tuple(pivots)

    def points(self):
        """Two independent points spanning the line (null space basis)."""
        free = [c for c in range(4) if c not in self.pivots]
        basis = []
        for f in free:
            v = [rational(0)] * 4
            v[f] = rational(1)
            for r, p in enumerate(self.pivots):
                v[p] = -self.rows[r][f]
            basis.append(tuple(v))
        return tuple(basis)

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        return all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash(tuple(hash(c) for row in self.rows for c in row))

    def __str__(self):
        def form(row):
            parts = []
            for i, c in enumerate(row):
                if not c.is_zero():
                    expr = f"x{i}" if c == 1 else f"({c})*x{i}"
                    parts.append(expr)
            return " + ".join(parts)

        return f"{form(self.rows[0])} ; {form(self.rows[1])}"

    def __repr__(self):
        return f"Line({self})"


def line_from_forms(f1, f2):
    """Canonicalized line cut out by two independent forms."""
    return Line(f1, f2)


class Incidence(Enum):
    SKEW = 0
    MEET = 1
    SAME = "SAME"


def _det(mat):
    """Exact determinant by cofactor expansion, skipping zero entries."""
    size = len(mat)
    if size == 1:
        return mat[0][0]
    total = None
    for j in range(size):
        entry = mat[0][j]
        if entry.is_zero():
            continue
        minor = [
            [row[c] for c in range(size) if c != j] for row in mat[1:]
        ]
        term = entry * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rational(0)
    return total


def stacked_determinant(a, b):
    """Determinant of the 4x4 matrix stacking both lines' canonical forms."""
    return _det([list(a.rows[0]), list(a.rows[1]), list(b.rows[0]), list(b.rows[1])])


def lines_meet(a, b):
    """SAME, MEET (one common point) or SKEW for two lines in P^3."""
    if a == b:
        return Incidence.SAME
    return Incidence.SKEW if not stacked_determinant(a, b).is_zero() else Incidence.MEET


MAX_FERMAT_EXPANSION_DEGREE = 12


def line_on_fermat(line, d):
    """Whether the line lies on x0^d + x1^d + x2^d + x3^d = 0.

    The line is parametrized by two spanning points and the substituted
    binomial expansion must vanish coefficient by coefficient.
    """
    if not isinstance(d, int) or d < 2:
        raise GeometryError(f"hypersurface degree must be an integer >= 2, got {d!r}")
    if d > MAX_FERMAT_EXPANSION_DEGREE:
        raise GeometryError(
            f"degree {d} exceeds the expansion bound {MAX_FERMAT_EXPANSION_DEGREE}"
        )
    p, q = line.points()
    pw_p = [[rational(1)] for _ in range(4)]
    pw_q = [[rational(1)] for _ in range(4)]
    for i in range(4):
        for _ in range(d):
            pw_p[i].append(pw_p[i][-1] * p[i])
            pw_q[i].append(pw_q[i][-1] * q[i])
    for j in range(d + 1):
        coeff = sum(
            (pw_p[i][j] * pw_q[i][d - j] for i in range(4)),
            rational(0),
        ) * comb(d, j)
        if not coeff.is_zero():
            return False
    return True
