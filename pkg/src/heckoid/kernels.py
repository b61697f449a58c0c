"""Backend selection for the letter kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is. Both expose the same functions and return identical results. Callers go
through ``kernels.<name>`` so that :func:`use` takes effect everywhere.
"""

from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels  # type: ignore[attr-defined]
except ImportError:  # not built
    _ckernels = None

_FUNCS = (
    "free_reduce", "cyclic_core", "riley_word", "sign_runs", "normal_form", "dehn_reduce", "least_rotation",
)


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def get_backend(name: str) -> ModuleType:
    if name == "python":
        return _pykernels
    if name == "cython":
        if _ckernels is None:
            raise ImportError("compiled kernels are not built; run `pip install -e .`")
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")


def use(name: str) -> None:
    """Route the module-level kernel functions to backend ``name``."""
    impl = get_backend(name)
    g = globals()
    for fn in _FUNCS:
        g[fn] = getattr(impl, fn)
    g["BACKEND"] = impl.BACKEND


BACKEND: str
free_reduce = cyclic_core = riley_word = sign_runs = normal_form = dehn_reduce = least_rotation = None
use("cython" if _ckernels is not None else "python")

