"""The compiled and pure-Python kernels must agree bit for bit."""

import random

import pytest

from acmcurves import kernel
from acmcurves.cyclo import get_order, rational, zeta

NEEDS_BOTH = pytest.mark.skipif(
    len(kernel.available()) < 2, reason="compiled backend not built"
)


@pytest.fixture(autouse=True)
def restore_backend():
    before = kernel.active()
    yield
    kernel.use(before)


def _random_pair(rng, n):
    phi = get_order(n).phi
    out = []
    for _ in range(2):
        val = rational(rng.randint(-9, 9), rng.randint(1, 9)).lift(n)
        for i in range(phi):
            c = rng.randint(-9, 9)
            if c:
                val = val + c * zeta(n, i)
        out.append(val)
    return out


@NEEDS_BOTH
def test_backend_parity_on_random_elements():
    rng = random.Random(2718)
    cases = [(n, *_random_pair(rng, n)) for n in (1, 2, 5, 8, 12, 30, 40) for _ in range(80)]
    per_backend = {}
    for name in kernel.available():
        kernel.use(name)
        rows = []
        for n, a, b in cases:
            s, d, p = a + b, a - b, a * b
            rows.append((s.nums, s.den, d.nums, d.den, p.nums, p.den))
            if not b.is_zero():
                q = a / b
                rows.append((q.nums, q.den))
        per_backend[name] = rows
    assert per_backend["python"] == per_backend["compiled"]


@NEEDS_BOTH
def test_backend_parity_on_a_fermat_build():
    from acmcurves.surfaces import build_fermat_model

    grams = {}
    for name in kernel.available():
        kernel.use(name)
        grams[name] = build_fermat_model(4).gram
    assert grams["python"] == grams["compiled"]


def test_backend_selection_errors():
    with pytest.raises(ValueError):
        kernel.use("fortran")


def test_python_backend_always_available():
    assert "python" in kernel.available()
    kernel.use("python")
    assert (zeta(5) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4)) == -1
