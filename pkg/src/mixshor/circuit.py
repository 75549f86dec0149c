"""Single-control-qubit period-finding circuit on density matrices.

Layout: qubit 0 is the recycled control qubit, qubits 1..n hold the work
register with qubit 1 as the most significant bit of the work integer b.
Stage s (0-indexed, s = 0..L-1) applies the controlled modular
multiplication with exponent 2^(L-1-s), an adaptive phase correction
conditioned on all previous measurement results, and a Hadamard on the
control, after which the control is measured; the measured bit m_s
carries weight 2^s in the outcome c = sum_s 2^s m_s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from . import densemat, numtheory

__all__ = [
    "DEAD_BRANCH_TOL",
    "InitialStateKind",
    "ShorInstance",
    "ComputerState",
    "build_instance",
    "initial_state",
    "work_distribution",
    "controlled_modmult_unitary",
    "phase_correction_angle",
    "stage_gates",
    "run_stage_gates",
    "measure_control",
    "reprepare_control",
    "reference_distribution",
]

DEAD_BRANCH_TOL = 1e-14


class InitialStateKind(Enum):
    """Preparation of the work register before the first stage."""

    PURE = "pure"            # basis state |1>
    MIXED_N = "mixed-n"      # uniform mixture over b < N
    MIXED_FULL = "mixed-full"  # maximally mixed work register, I / 2^n


@dataclass(frozen=True)
class ShorInstance:
    """Static description of one period-finding problem."""

    N: int
    a: int
    n: int   # work qubits, ceil(log2 N)
    L: int   # control stages, 2n
    t: int   # 2^L
    r: int   # true order of a mod N, from the brute-force oracle
    pq: tuple[int, int] | None  # prime factors when N is a semiprime

    @property
    def m(self) -> int:
        """Total qubit count: one control plus the work register."""
        return self.n + 1


@dataclass(frozen=True)
class ComputerState:
    """Density matrix plus measurement history of a running algorithm."""

    rho: np.ndarray
    stage: int
    bits: tuple[int, ...]


def build_instance(N: int, a: int) -> ShorInstance:
    """Populate every derived field for a (N, a) problem."""
    if not 6 <= N <= 31:
        raise ValueError(f"N={N} outside the supported range 6..31")
    if numtheory.is_prime(N):
        raise ValueError(f"N={N} is prime")
    if not 2 <= a < N:
        raise ValueError(f"need 2 <= a < N, got a={a}")
    if math.gcd(a, N) != 1:
        raise ValueError(f"a={a} not coprime to N={N}")
    n = (N - 1).bit_length()
    L = 2 * n
    return ShorInstance(
        N=N,
        a=a,
        n=n,
        L=L,
        t=1 << L,
        r=numtheory.multiplicative_order(a, N),
        pq=numtheory.factor_semiprime(N),
    )


def work_distribution(inst: ShorInstance, kind: InitialStateKind) -> np.ndarray:
    """Diagonal of the initial work-register state over b in [0, 2^n)."""
    dim = 1 << inst.n
    w = np.zeros(dim)
    if kind is InitialStateKind.PURE:
        w[1] = 1.0
    elif kind is InitialStateKind.MIXED_N:
        w[: inst.N] = 1.0 / inst.N
    elif kind is InitialStateKind.MIXED_FULL:
        w[:] = 1.0 / dim
    else:
        raise ValueError(f"unknown initial state kind {kind!r}")
    return w


def initial_state(
    inst: ShorInstance, kind: InitialStateKind, epsilon: float = 0.0
) -> ComputerState:
    """Control prepared toward |+> (mixed by epsilon), work register per kind."""
    work = np.diag(work_distribution(inst, kind)).astype(complex)
    control0 = np.zeros((2, 2), dtype=complex)
    control0[0, 0] = 1.0
    rho = densemat.kron(control0, work)
    rho = _mix_and_hadamard_control(rho, epsilon)
    return ComputerState(rho=rho, stage=0, bits=())


@lru_cache(maxsize=None)
def _modmult_inverse_permutation(inst: ShorInstance, x: int) -> np.ndarray:
    """Inverse of the basis permutation realised by cU_a^(2^x)."""
    mult = inst.a
    for _ in range(x):
        mult = mult * mult % inst.N
    half = 1 << inst.n
    perm = np.arange(2 * half)
    for b in range(inst.N):
        perm[half + b] = half + mult * b % inst.N
    inv = np.empty_like(perm)
    inv[perm] = np.arange(2 * half)
    inv.flags.writeable = False
    return inv


def controlled_modmult_unitary(inst: ShorInstance, x: int) -> np.ndarray:
    """Permutation matrix of the controlled modular multiplication.

    Identity on the control=0 block and on work values b >= N; on the
    control=1 block it multiplies b < N by a^(2^x) mod N, precomputed
    classically.
    """
    if not 0 <= x < inst.L:
        raise ValueError(f"exponent index {x} outside 0..{inst.L - 1}")
    inv = _modmult_inverse_permutation(inst, x)
    dim = inv.size
    u = np.zeros((dim, dim), dtype=complex)
    perm = np.empty(dim, dtype=int)
    perm[inv] = np.arange(dim)
    u[perm, np.arange(dim)] = 1.0
    return u


def phase_correction_angle(bits, s: int) -> float:
    """Accumulated correction angle theta_s in [0, 1) turns for stage s.

    theta_s = sum_{k=2}^{s+1} m_{s+1-k} / 2^k, so the gate applied is
    diag(1, exp(-2 pi i theta_s)) on the control qubit.
    """
    if s < 0 or len(bits) < s:
        raise ValueError("need at least s measured bits")
    theta = 0.0
    for k in range(2, s + 2):
        theta += bits[s + 1 - k] / (1 << k)
    return theta


def _apply_modmult(rho: np.ndarray, inv_perm: np.ndarray) -> np.ndarray:
    # Permutation conjugation by row/column gather; exact, no hermitization needed.
    return rho[np.ix_(inv_perm, inv_perm)]


def _apply_control_phase(rho: np.ndarray, theta: float) -> np.ndarray:
    """diag(1, exp(-2 pi i theta)) on the control qubit."""
    half = rho.shape[0] // 2
    out = rho.copy()
    phase = np.exp(-2j * np.pi * theta)
    out[half:, :half] *= phase
    out[:half, half:] *= np.conj(phase)
    return out


def _apply_control_hadamard(rho: np.ndarray) -> np.ndarray:
    half = rho.shape[0] // 2
    a = rho[:half, :half]
    b = rho[:half, half:]
    c = rho[half:, :half]
    d = rho[half:, half:]
    out = np.empty_like(rho)
    out[:half, :half] = (a + b + c + d) * 0.5
    out[:half, half:] = (a - b + c - d) * 0.5
    out[half:, :half] = (a + b - c - d) * 0.5
    out[half:, half:] = (a - b - c + d) * 0.5
    return out


def _apply_control_flip(rho: np.ndarray) -> np.ndarray:
    half = rho.shape[0] // 2
    out = np.empty_like(rho)
    out[:half, :half] = rho[half:, half:]
    out[half:, half:] = rho[:half, :half]
    out[:half, half:] = rho[half:, :half]
    out[half:, :half] = rho[:half, half:]
    return out


def _mix_and_hadamard_control(rho: np.ndarray, epsilon: float) -> np.ndarray:
    """From control |0>: mix with the flipped state, then Hadamard.

    Produces (1-eps)|psi><psi| + eps|psi_perp><psi_perp| on the control
    with |psi> = (|0> + |1>)/sqrt(2).
    """
    if not 0.0 <= epsilon <= 0.5:
        raise ValueError(f"epsilon={epsilon} outside [0, 1/2]")
    if epsilon:
        rho = (1.0 - epsilon) * rho + epsilon * _apply_control_flip(rho)
    return _apply_control_hadamard(rho)


def stage_gates(inst: ShorInstance, s: int, bits):
    """Displayed gates of stage s in circuit order, as (name, apply) pairs.

    The phase correction appears from the second stage onward, matching
    the displayed circuit; its angle at stage 0 would be zero anyway.
    """
    if not 0 <= s < inst.L:
        raise ValueError(f"stage {s} outside 0..{inst.L - 1}")
    inv = _modmult_inverse_permutation(inst, inst.L - 1 - s)
    ops = [("cu", lambda rho: _apply_modmult(rho, inv))]
    if s >= 1:
        theta = phase_correction_angle(bits, s)
        ops.append(("phase", lambda rho: _apply_control_phase(rho, theta)))
    ops.append(("h", _apply_control_hadamard))
    return ops


def run_stage_gates(state: ComputerState, s: int, inst: ShorInstance) -> ComputerState:
    """Apply controlled multiplication, phase correction and Hadamard.

    Does not measure; the stage counter advances on measurement.
    """
    if state.stage != s:
        raise ValueError(f"state is at stage {state.stage}, not {s}")
    rho = state.rho
    for _, apply in stage_gates(inst, s, state.bits):
        rho = apply(rho)
    if densemat.validation_enabled():
        densemat.assert_valid_state(rho, context=f"stage {s} gates")
    return ComputerState(rho=rho, stage=state.stage, bits=state.bits)


def measure_control(state: ComputerState):
    """Projective measurement of the control in the computational basis.

    Returns ((p0, branch0), (p1, branch1)); a branch with probability
    below DEAD_BRANCH_TOL is dead and returned as None.
    """
    rho = state.rho
    half = rho.shape[0] // 2
    diag = np.real(np.diag(rho))
    p0 = float(diag[:half].sum())
    p1 = float(diag[half:].sum())
    if p0 < DEAD_BRANCH_TOL and p1 < DEAD_BRANCH_TOL:
        raise ValueError("both measurement outcomes have zero probability")

    def collapse(bit: int, p: float) -> ComputerState | None:
        if p < DEAD_BRANCH_TOL:
            return None
        out = np.zeros_like(rho)
        sl = slice(0, half) if bit == 0 else slice(half, 2 * half)
        out[sl, sl] = rho[sl, sl] / p
        return ComputerState(rho=out, stage=state.stage + 1, bits=state.bits + (bit,))

    return (p0, collapse(0, p0)), (p1, collapse(1, p1))


def reprepare_control(state: ComputerState, epsilon: float = 0.0) -> ComputerState:
    """Reset the measured control toward |+>, optionally mixed by epsilon.

    Flips the control to |0> if the last measured bit was 1, mixes the
    state with its control-flipped copy in proportions (1-eps, eps), and
    applies a Hadamard.  epsilon = 0 reproduces the exact |+> reset.
    """
    if not state.bits:
        raise ValueError("control has not been measured yet")
    rho = state.rho
    if state.bits[-1] == 1:
        rho = _apply_control_flip(rho)
    rho = _mix_and_hadamard_control(rho, epsilon)
    return ComputerState(rho=rho, stage=state.stage, bits=state.bits)


def reference_distribution(inst: ShorInstance, kind: InitialStateKind) -> np.ndarray:
    """Outcome distribution over c from the L-control-qubit formulation.

    Evaluates P(c) = sum_b w_b sum_y |(1/t) sum_{x: b a^x = y} e^{-2 pi i x c / t}|^2
    directly, with the inner sums done as FFTs of periodic indicators.
    This is the independent oracle the staged engine is checked against.
    """
    if inst.t > 4096:
        raise ValueError("reference distribution supported for t <= 4096 only")
    t = inst.t
    weights = work_distribution(inst, kind)
    cycles = numtheory.permutation_cycles(inst.a, inst.N, inst.n).cycles
    probs = np.zeros(t)
    spectra: dict[int, np.ndarray] = {}
    for cyc in cycles:
        w = float(sum(weights[b] for b in cyc))
        if w == 0.0:
            continue
        period = len(cyc)
        if period not in spectra:
            total = np.zeros(t)
            for j in range(period):
                indicator = np.zeros(t)
                indicator[j::period] = 1.0
                amp = np.fft.fft(indicator)
                total += amp.real**2 + amp.imag**2
            spectra[period] = total / float(t) ** 2
        probs += w * spectra[period]
    return probs
