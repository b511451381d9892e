"""Divisor-class calculus over a surface lattice model.

Classes are integer vectors over a model's generators; the pairing extends
the Gram matrix bilinearly.  Genus and chi follow the adjunction and
Riemann-Roch shapes and are defined for arbitrary integer classes, not just
effective ones; a non-integral value is an error that proves the class
cannot occur as stated.
"""

import itertools
from dataclasses import dataclass


class NonIntegralError(ValueError):
    """A genus or chi computation produced a half-integer."""


class ModelMismatchError(ValueError):
    """Classes from different model instances were combined."""


def _same_model(a, b):
    if a.model is not b.model:
        raise ModelMismatchError(
            "classes belong to different model instances; build both from one model"
        )


@dataclass(frozen=True)
class DivClass:
    """Integer combination of a model's generator classes."""

    model: object
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(v) for v in self.coeffs)
        if len(coeffs) != self.model.ngens:
            raise ValueError(
                f"expected {self.model.ngens} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    def __add__(self, other):
        if not isinstance(other, DivClass):
            return NotImplemented
        _same_model(self, other)
        return DivClass(self.model, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, DivClass):
            return NotImplemented
        _same_model(self, other)
        return DivClass(self.model, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return DivClass(self.model, tuple(-x for x in self.coeffs))

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return DivClass(self.model, tuple(k * x for x in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coeffs)

    def __str__(self):
        from .exprs import format_divisor

        return format_divisor(self)

    def __repr__(self):
        return f"DivClass({self})"


def pair(a, b):
    """Exact intersection number a^T Gram b."""
    _same_model(a, b)
    gram = a.model.gram
    bidx = [(j, y) for j, y in enumerate(b.coeffs) if y]
    total = 0
    for i, x in enumerate(a.coeffs):
        if x:
            row = gram[i]
            s = 0
            for j, y in bidx:
                s += row[j] * y
            total += x * s
    return total


def degree(d):
    """Degree of a class: pairing against the hyperplane class."""
    return pair(d.model.hyperplane_class, d)


def genus(d):
    """Arithmetic genus 1 + d.(d+K)/2; raises on a half-integer."""
    val = pair(d, d + d.model.canonical_class)
    if val % 2:
        raise NonIntegralError(f"d.(d+K) = {val} is odd; genus is not an integer")
    return 1 + val // 2


def chi(d):
    """Euler characteristic chi(O_X) + d.(d-K)/2; raises on a half-integer."""
    val = pair(d, d - d.model.canonical_class)
    if val % 2:
        raise NonIntegralError(f"d.(d-K) = {val} is odd; chi is not an integer")
    return d.model.chi0 + val // 2


def k_invariant(d):
    """The classification parameter k = deg(d) + 1 - genus(d)."""
    return degree(d) + 1 - genus(d)


def link(d, m):
    """Liaison by a degree-m complete intersection: the class m*H - d."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"liaison degree must be a positive integer, got {m!r}")
    return m * d.model.hyperplane_class - d


def deg1_effectivity_test(d):
    """On a quintic model, a degree-1 class is effective iff d.d = -3."""
    if d.model.degree != 5:
        raise ValueError("the degree-1 effectivity criterion applies to quintic models")
    if degree(d) != 1:
        raise ValueError(f"class has degree {degree(d)}, need degree 1")
    return pair(d, d) == -3


@dataclass(frozen=True)
class Decomposition:
    """A multiset of classes with positive multiplicities."""

    parts: tuple  # ((DivClass, mult), ...)

    def __post_init__(self):
        parts = tuple((cls, int(mult)) for cls, mult in self.parts)
        if not parts:
            raise ValueError("a decomposition needs at least one part")
        model = parts[0][0].model
        for cls, mult in parts:
            if mult < 1:
                raise ValueError("multiplicities must be >= 1")
            if cls.model is not model:
                raise ModelMismatchError("decomposition parts must share one model")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *items):
        parts = []
        for item in items:
            if isinstance(item, DivClass):
                parts.append((item, 1))
            else:
                parts.append(tuple(item))
        return cls(tuple(parts))

    @property
    def model(self):
        return self.parts[0][0].model

    @property
    def total(self):
        acc = self.parts[0][0].model.zero_class()
        for cls, mult in self.parts:
            acc = acc + mult * cls
        return acc

    @property
    def size(self):
        return sum(mult for _, mult in self.parts)

    def expanded(self):
        out = []
        for cls, mult in self.parts:
            out.extend([cls] * mult)
        return out

    def __str__(self):
        bits = []
        for cls, mult in self.parts:
            text = str(cls)
            bits.append(text if mult == 1 else f"{mult} x ({text})")
        return " | ".join(bits)


def genus_of_sum(decomp):
    """Genus of a sum of parts via P_a(A+B) = P_a(A) + P_a(B) + A.B - 1."""
    acc = None
    g = 0
    for cls, mult in decomp.parts:
        part_genus = genus(cls)
        for _ in range(mult):
            if acc is None:
                acc, g = cls, part_genus
            else:
                g = g + part_genus + pair(acc, cls) - 1
                acc = acc + cls
    return g


MAX_CONNECTEDNESS_SIZE = 20


@dataclass(frozen=True)
class ConnectednessResult:
    connected: bool
    minimum: int | None  # least D1.D2 over proper splits, None if no split exists
    split: tuple | None  # (Decomposition, Decomposition) achieving the minimum


def is_m_connected(decomp, m):
    """Whether every proper effective split D1 + D2 has D1.D2 >= m.

    All proper nonempty sub-multisets are enumerated; on failure the first
    minimizing split is returned as the witness.
    """
    if decomp.size > MAX_CONNECTEDNESS_SIZE:
        raise ValueError(
            f"decomposition has total multiplicity {decomp.size}, "
            f"exceeding the enumeration bound {MAX_CONNECTEDNESS_SIZE}"
        )
    parts = decomp.parts
    npairs = [[pair(a, b) for b, _ in parts] for a, _ in parts]
    mults = [mult for _, mult in parts]
    best = None
    best_take = None
    for take in itertools.product(*(range(mu + 1) for mu in mults)):
        if not any(take) or all(t == mu for t, mu in zip(take, mults)):
            continue
        val = 0
        for i, ti in enumerate(take):
            if ti:
                row = npairs[i]
                for j, mu in enumerate(mults):
                    rest = mu - take[j]
                    if rest:
                        val += ti * rest * row[j]
        if best is None or val < best:
            best = val
            best_take = take
    if best is None:
        return ConnectednessResult(True, None, None)
    if best >= m:
        return ConnectednessResult(True, best, None)
    d1 = Decomposition(
        tuple((parts[i][0], t) for i, t in enumerate(best_take) if t)
    )
    d2 = Decomposition(
        tuple(
            (parts[i][0], mults[i] - t)
            for i, t in enumerate(best_take)
            if mults[i] - t
        )
    )
    return ConnectednessResult(False, best, (d1, d2))


@dataclass(frozen=True)
class HVector:
    """Second difference of a Hilbert function, finitely supported."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        if any(v < 0 for v in entries):
            raise ValueError("h-vector entries must be nonnegative")
        if entries and entries[0] < 1:
            raise ValueError("h(0) must be >= 1 for a nonempty curve")
        object.__setattr__(self, "entries", entries)


def hvector_invariants(h):
    """(degree, genus) = (sum h(l), sum (l-1) h(l) over l >= 1)."""
    if isinstance(h, (list, tuple)):
        h = HVector(tuple(h))
    deg = sum(h.entries)
    gen = sum((l - 1) * v for l, v in enumerate(h.entries) if l >= 1)
    return deg, gen


@dataclass(frozen=True)
class EffectivityCertificate:
    ok: bool
    reason: str
    parts: tuple | None = None  # ((DivClass, mult), ...) when certified by combination


def certify_effective(d):
    """Sufficient effectivity certificate.

    A class passes when it is a nonnegative combination of the registered
    effective classes (generators, and for Fermat atlases also the residual
    plane curves H - L cut on a plane through an atlas line), or when the
    quintic degree-1 self-intersection criterion applies.  Failure does not
    prove the class ineffective.
    """
    model = d.model
    if d.is_zero():
        return EffectivityCertificate(True, "zero class", ())
    if model.kind == "fermat":
        c_h = d.coeffs[0]
        need = sum(-c for c in d.coeffs[1:] if c < 0)
        if need <= c_h:
            parts = []
            if c_h - need:
                parts.append((model.hyperplane_class, c_h - need))
            for i, c in enumerate(d.coeffs[1:], start=1):
                gen = model.gen_class(model.generators[i])
                if c > 0:
                    parts.append((gen, c))
                elif c < 0:
                    parts.append((model.hyperplane_class - gen, -c))
            return EffectivityCertificate(
                True,
                "nonnegative combination of H, atlas lines, and residual plane curves",
                tuple(parts),
            )
    else:
        if all(c >= 0 for c in d.coeffs):
            parts = tuple(
                (model.gen_class(model.generators[i]), c)
                for i, c in enumerate(d.coeffs)
                if c
            )
            return EffectivityCertificate(
                True, "nonnegative combination of registered generators", parts
            )
    if model.degree == 5 and degree(d) == 1 and pair(d, d) == -3:
        return EffectivityCertificate(
            True, "degree-1 class with self-intersection -3", ((d, 1),)
        )
    return EffectivityCertificate(
        False, "not certified; the registered-effective policy is sufficient, not necessary"
    )
