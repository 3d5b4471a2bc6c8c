"""Backend selection for the automata kernels.

The compiled extension is used when it imported and the automata fit in
64-bit masks; otherwise calls fall through to the pure-Python kernels.  Set
``SPECALG_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py as py

try:
    if os.environ.get("SPECALG_PURE_PYTHON"):
        raise ImportError("pure-Python backend forced")
    from . import _kernels as ext
except ImportError:  # extension not built
    ext = None

BACKEND = "cython" if ext is not None else "python"

_MASK_BITS = 64


def nfa_included(n_a, n_b, k, succ_a, init_a, acc_a, succ_b, init_b, acc_b, cap):
    if ext is not None and n_a <= _MASK_BITS and n_b <= _MASK_BITS:
        return ext.nfa_included(n_a, n_b, k, succ_a, init_a, acc_a, succ_b, init_b, acc_b, cap)
    return py.nfa_included(n_a, n_b, k, succ_a, init_a, acc_a, succ_b, init_b, acc_b, cap)


def determinize(n, k, succ, init, cap):
    if ext is not None and n <= _MASK_BITS:
        return ext.determinize(n, k, succ, init, cap)
    return py.determinize(n, k, succ, init, cap)


def simulation(n_a, n_b, k, fwd_a, bwd_a, fwd_b, bwd_b):
    if ext is not None and n_a <= _MASK_BITS and n_b <= _MASK_BITS:
        return ext.simulation(n_a, n_b, k, fwd_a, bwd_a, fwd_b, bwd_b)
    return py.simulation(n_a, n_b, k, fwd_a, bwd_a, fwd_b, bwd_b)


def attractor(n, k, succ, ctrl, seed):
    if ext is not None and n <= _MASK_BITS:
        return ext.attractor(n, k, succ, ctrl, seed)
    return py.attractor(n, k, succ, ctrl, seed)


def det_product(n_b, k, delta_a, req_a, init_a, delta_b, req_b, init_b, both):
    if ext is not None:
        return ext.det_product(n_b, k, delta_a, req_a, init_a, delta_b, req_b, init_b, both)
    return py.det_product(n_b, k, delta_a, req_a, init_a, delta_b, req_b, init_b, both)
