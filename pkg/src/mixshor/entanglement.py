"""Logarithmic negativity across bipartitions, PPT testing, mixedness."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import densemat

__all__ = [
    "CLAMP_TOL",
    "bipartitions",
    "log_negativity",
    "average_log_negativity",
    "is_ppt",
    "mixedness",
]

# Values of |log2 Tr|rho^T|| below this are treated as exactly zero; this
# threshold defines the "zero entanglement" crossing in the mixing sweeps.
CLAMP_TOL = 1e-10


@lru_cache(maxsize=None)
def bipartitions(m: int) -> tuple[tuple[int, ...], ...]:
    """All canonical bipartitions of m qubits.

    A bipartition is identified with the side not containing qubit 0,
    which removes the subset/complement ambiguity; there are 2^(m-1) - 1
    of them.
    """
    if m < 2:
        raise ValueError("bipartitions need at least 2 qubits")
    out = []
    others = list(range(1, m))
    for mask in range(1, 1 << (m - 1)):
        out.append(tuple(q for i, q in enumerate(others) if mask >> i & 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _transpose_axes(m: int, subset: tuple[int, ...]) -> tuple[int, ...]:
    axes = list(range(2 * m))
    for q in subset:
        axes[q], axes[m + q] = axes[m + q], axes[q]
    return tuple(axes)


def log_negativity(rho: np.ndarray, partition) -> float:
    """log2 of the trace norm of the partial transpose over `partition`."""
    value = float(
        np.log2(densemat.trace_norm_hermitian(densemat.partial_transpose(rho, partition)))
    )
    return 0.0 if abs(value) < CLAMP_TOL else value


def average_log_negativity(rho: np.ndarray) -> float:
    """Unweighted mean of log_negativity over all canonical bipartitions.

    The partial transposes are stacked and diagonalized in one batched
    call; this is the inner loop of the tree simulations.
    """
    m = densemat.num_qubits(rho)
    parts = bipartitions(m)
    dim = rho.shape[0]
    tens = rho.reshape((2,) * (2 * m))
    stack = np.empty((len(parts), dim, dim), dtype=complex)
    for i, subset in enumerate(parts):
        stack[i] = tens.transpose(_transpose_axes(m, subset)).reshape(dim, dim)
    vals = np.linalg.eigvalsh(stack)
    e = np.log2(np.abs(vals).sum(axis=1))
    e[np.abs(e) < CLAMP_TOL] = 0.0
    return float(e.mean())


def is_ppt(rho: np.ndarray, partition, tol: float = 1e-10) -> bool:
    """True when the partial transpose has no eigenvalue below -tol.

    A positive partial transpose is necessary (not sufficient) for
    separability, so is_ppt=False certifies entanglement while
    is_ppt=True certifies nothing.
    """
    vals = densemat.hermitian_eigenvalues(densemat.partial_transpose(rho, partition))
    return bool(vals[-1] >= -tol)


def mixedness(rho: np.ndarray) -> float:
    """Von Neumann entropy of the whole computer state, in bits."""
    return densemat.von_neumann_entropy(rho)
