"""Kernel backend selection: numba-jitted kernels with a numpy fallback.

The kernel source (_kernels.py) is loaded twice: one copy stays plain
Python ("numpy" backend) and one copy has every kernel replaced in place
by its numba-compiled twin ("numba" backend). Loading two module objects
keeps both variants importable side by side, which the parity tests and
the backend comparison benchmark rely on.

Selection is per process via the SUDOKULAB_BACKEND environment variable:

    auto   (default) numba when importable, numpy otherwise
    numba  require numba, fail loudly if missing
    numpy  force the interpreted fallback

Both backends produce bit-identical results (solutions, node counts,
RNG streams); only speed differs.
"""

from __future__ import annotations

import importlib.util
import os
import sys

_ENV_VAR = "SUDOKULAB_BACKEND"
_KERNEL_PATH = os.path.join(os.path.dirname(__file__), "_kernels.py")


def _load_kernel_module(name):
    spec = importlib.util.spec_from_file_location(name, _KERNEL_PATH)
    mod = importlib.util.module_from_spec(spec)
    # Registering before exec lets numba resolve recursive self-calls.
    sys.modules[name] = mod
    spec.loader.exec_module(mod)
    return mod


def _jit_kernels(mod):
    from numba import njit

    # Patch the module in place so compile-time global lookups inside
    # each kernel resolve to the jitted dispatchers, not the originals.
    # cache=False: numba cannot disk-cache self-recursive functions.
    for name in mod.KERNEL_NAMES:
        setattr(mod, name, njit(cache=False)(getattr(mod, name)))
    return mod


def _numba_available():
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def _listify_tables(mod):
    # The interpreted path indexes the lookup tables per element; plain
    # nested lists make that several times cheaper than ndarray scalar
    # access. The kernel source only ever does tbl[i][j] / tbl[i].
    mod.PEERS = mod.PEERS.tolist()
    mod.POPCOUNT = mod.POPCOUNT.tolist()
    return mod


pure_kernels = _listify_tables(_load_kernel_module("sudokulab._kernels_numpy"))

_requested = os.environ.get(_ENV_VAR, "auto").strip().lower()
if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"{_ENV_VAR} must be 'auto', 'numba' or 'numpy', got {_requested!r}"
    )
if _requested == "numba" and not _numba_available():
    raise ImportError(f"{_ENV_VAR}=numba but numba is not installed")

_use_numba = _requested in ("auto", "numba") and _numba_available()

if _use_numba:
    numba_kernels = _jit_kernels(_load_kernel_module("sudokulab._kernels_numba"))
    kernels = numba_kernels
else:
    numba_kernels = None
    kernels = pure_kernels

ACTIVE_BACKEND = "numba" if _use_numba else "numpy"


def get_kernels(backend=None):
    """Return the kernel namespace for `backend` (default: the active one)."""
    if backend in (None, "auto"):
        return kernels
    if backend == "numpy":
        return pure_kernels
    if backend == "numba":
        if numba_kernels is None:
            raise ImportError("numba backend requested but numba is not installed")
        return numba_kernels
    raise ValueError(f"unknown backend {backend!r}")


def adapt_board(k, flat):
    """Best board container for kernel namespace `k`.

    The kernels only index and assign, so they run over any mutable
    sequence; plain lists cut the interpreted fallback's per-access
    cost roughly in half, while the jitted kernels require the ndarray.
    `flat` must be a length-81 int8 vector.
    """
    return flat.tolist() if k is pure_kernels else flat


def new_counters(k):
    """A (nodes, backtracks) accumulator suited to kernel namespace `k`."""
    import numpy as np

    return [0, 0] if k is pure_kernels else np.zeros(2, dtype=np.int64)


def new_candidate_state(k):
    """Fresh (masks, active) pair suited to kernel namespace `k`."""
    import numpy as np

    if k is pure_kernels:
        return [0] * 81, [0] * 81
    return np.zeros(81, dtype=np.int64), np.zeros(81, dtype=np.int64)


def warm_up(backend=None):
    """Trigger JIT compilation of every kernel so later calls are not
    charged compile time. No-op on the numpy backend."""
    import numpy as np

    k = get_kernels(backend)
    if k is pure_kernels:
        return
    cells = np.zeros(81, dtype=np.int8)
    cells[:9] = np.arange(1, 10, dtype=np.int8)
    counters = np.zeros(2, dtype=np.int64)
    masks = np.zeros(81, dtype=np.int64)
    active = np.zeros(81, dtype=np.int64)
    k.count_completions(cells.copy(), 1)
    k.backtrack_search(cells.copy(), 0, counters)
    work = cells.copy()
    k.randomized_fill(work, 0, 1)
    for ordering in (k.ORDER_NATURAL, k.ORDER_SHUFFLED, k.ORDER_LCV):
        for use_trail in (False, True):
            work = cells.copy()
            n = k.init_candidates(work, masks, active)
            k.heuristic_search(
                work, masks.copy(), active.copy(), n, ordering, 1, counters,
                use_trail,
            )
