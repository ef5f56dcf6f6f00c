"""Kernel dispatch: the compiled extension when it imports, the pure-Python module otherwise."""

from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _ckernels = None

_NAMES = ("hyperplane_count", "in_alcove", "path_degree", "bead_hd", "compositions")

BACKEND = "compiled" if _ckernels is not None else "python"


def available_backends() -> list[str]:
    return ["python"] + (["compiled"] if _ckernels is not None else [])


def backend_module(name: str) -> ModuleType:
    if name == "python":
        return _pykernels
    if name == "compiled":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")


def use_backend(name: str) -> None:
    """Rebind the module-level kernel functions (used by the benchmark and the parity tests)."""
    global BACKEND
    mod = backend_module(name)
    g = globals()
    for fn in _NAMES:
        g[fn] = getattr(mod, fn)
    BACKEND = name


hyperplane_count = _pykernels.hyperplane_count
in_alcove = _pykernels.in_alcove
path_degree = _pykernels.path_degree
bead_hd = _pykernels.bead_hd
compositions = _pykernels.compositions
use_backend(BACKEND)
