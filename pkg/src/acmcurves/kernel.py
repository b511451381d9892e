"""Backend selection for the arithmetic kernels.

The compiled extension is preferred when it importable; the pure-Python
twin is always available.  Both expose the same functions and produce
bit-identical results, so switching is safe at any time (used by the
benchmark and by the parity tests).  Selection is an explicit API call,
never an environment variable.
"""

from . import _corepy

try:
    from . import _corec
except ImportError:  # extension not built
    _corec = None

_IMPLS = {"python": _corepy, "compiled": _corec}

normalize = None
add = None
sub = None
mul = None
_active = None


def available():
    """Names of the usable backends."""
    return tuple(name for name, mod in _IMPLS.items() if mod is not None)


def active():
    return _active


def use(name):
    """Select a backend by name ("python" or "compiled")."""
    global normalize, add, sub, mul, _active
    mod = _IMPLS.get(name)
    if mod is None:
        raise ValueError(
            f"backend {name!r} not available; choose from {available()}"
        )
    normalize = mod.normalize
    add = mod.add
    sub = mod.sub
    mul = mod.mul
    _active = name


use("compiled" if _corec is not None else "python")
