"""Per-qubit stochastic noise: nonselective measurement and uniform Pauli.

Noise events are sampled per trajectory (one Bernoulli draw per qubit per
displayed gate); the channel applied when an event fires is the full
outcome mixture, since a running algorithm would not learn the result.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import densemat

__all__ = [
    "MEASUREMENT",
    "PAULI",
    "NoiseConfig",
    "dephase_qubit",
    "depolarize_qubit",
    "noise_pass",
]

MEASUREMENT = "measurement"
PAULI = "pauli"


@dataclass(frozen=True)
class NoiseConfig:
    """Which channel fires, with what per-qubit per-gate probability."""

    kind: str
    prob: float
    exclude_control: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.kind not in (MEASUREMENT, PAULI):
            raise ValueError(f"unknown noise kind {self.kind!r}")
        if not 0.0 <= self.prob <= 1.0:
            raise ValueError(f"noise probability {self.prob} outside [0, 1]")


def dephase_qubit(rho: np.ndarray, q: int) -> np.ndarray:
    """Nonselective computational-basis measurement of qubit q.

    P0 rho P0 + P1 rho P1: diagonal entries are untouched, coherences
    between the two values of qubit q are zeroed.
    """
    m = densemat.num_qubits(rho)
    if not 0 <= q < m:
        raise ValueError(f"bad qubit index {q}")
    tens = rho.reshape((2,) * (2 * m)).copy()
    cross = [slice(None)] * (2 * m)
    cross[q], cross[m + q] = 0, 1
    tens[tuple(cross)] = 0.0
    cross[q], cross[m + q] = 1, 0
    tens[tuple(cross)] = 0.0
    return tens.reshape(rho.shape)


def depolarize_qubit(rho: np.ndarray, q: int) -> np.ndarray:
    """Uniform mixture of identity and the three Pauli conjugations on qubit q.

    Leaves the qubit in the maximally mixed state I/2 and removes any
    entanglement across cuts isolating it.
    """
    m = densemat.num_qubits(rho)
    if not 0 <= q < m:
        raise ValueError(f"bad qubit index {q}")
    out = rho.copy()
    for pauli in (densemat.PAULI_X, densemat.PAULI_Y, densemat.PAULI_Z):
        out = out + densemat.apply_local_gate(rho, pauli, [q])
    return out * 0.25


def noise_pass(
    rho: np.ndarray, config: NoiseConfig | None, gate_index: int, rng
) -> np.ndarray:
    """One post-gate noise opportunity for every qubit.

    Draws a Bernoulli(prob) per qubit in ascending order (skipping the
    control qubit 0 when excluded) and applies the configured channel on
    a hit.  `rng` must be the trajectory's dedicated stream so results
    are reproducible independent of scheduling; gate_index documents the
    position in the circuit for callers that key their streams finer.
    """
    if config is None or config.prob == 0.0:
        return rho
    m = densemat.num_qubits(rho)
    channel = dephase_qubit if config.kind == MEASUREMENT else depolarize_qubit
    start = 1 if config.exclude_control else 0
    for q in range(start, m):
        if rng.random() < config.prob:
            rho = channel(rho, q)
    if densemat.validation_enabled():
        densemat.assert_valid_state(rho, context=f"noise after gate {gate_index}")
    return rho
