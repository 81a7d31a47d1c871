"""Exact statevector simulation under the diagonal crosstalk model.

Gates follow a serial schedule: one basic gate per step, and after every
step each basis state picks up phase exp(-i * error_phase) from the
always-on interaction.  The model is diagonal, so the error step is an
exact diagonal unitary, not a perturbative approximation.

Two engines cover the same physics.  ``run`` evolves the full register
(dense, capped at MAX_QUBITS).  ``run_compressed`` evolves only the 2^L
logical amplitudes of a spacer-encoded register, tracking where each
data qubit currently sits; spacers stay |0>, so data-spacer coupling
reduces to known single-qubit phases and spacer-spacer pairs contribute
nothing.  Both engines agree amplitude-for-amplitude.

Site 1 maps to the most significant bit of the amplitude index, so
``int(bits, 2)`` is the index of basis state ``bits``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .circuits import Gate, Gate1Q, Gate2Q, LogicalCircuit, PhysicalCircuit, SwapGate, WaitGate
from .encoder import EncodingParams, data_position
from .errors import CapacityError, UnsupportedGateError
from .interactions import CouplingLaw, RegisterLayout, coupling_strength

MAX_QUBITS = 24
SPACER_TOL = 1e-12
_NORM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class StateVector:
    """Dense amplitudes over n qubits, unit norm."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.n > MAX_QUBITS:
            raise CapacityError(f"{self.n} qubits exceeds the dense cap of {MAX_QUBITS}")
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} amplitudes, got shape {amps.shape}")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"state norm {norm} is not 1")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def zero(cls, n: int) -> StateVector:
        return cls.from_bits("0" * n)

    @classmethod
    def from_bits(cls, bits: str) -> StateVector:
        if not bits or any(c not in "01" for c in bits):
            raise ValueError("bits must be a non-empty string over '0'/'1'")
        if len(bits) > MAX_QUBITS:  # refuse before allocating 2^n amplitudes
            raise CapacityError(f"{len(bits)} qubits exceeds the dense cap of {MAX_QUBITS}")
        amps = np.zeros(1 << len(bits), dtype=complex)
        amps[int(bits, 2)] = 1.0
        return cls(len(bits), amps)

    @classmethod
    def uniform(cls, n: int) -> StateVector:
        """Equal-weight superposition of all basis states (all |+>)."""
        if n < 1:
            raise ValueError("n must be >= 1")
        if n > MAX_QUBITS:
            raise CapacityError(f"{n} qubits exceeds the dense cap of {MAX_QUBITS}")
        return cls(n, np.full(1 << n, 2.0 ** (-n / 2.0), dtype=complex))

    def amplitude(self, bits: str) -> complex:
        if len(bits) != self.n or any(c not in "01" for c in bits):
            raise ValueError(f"need {self.n} bits over '0'/'1'")
        return complex(self.amplitudes[int(bits, 2)])

    def probability(self, bits: str) -> float:
        return abs(self.amplitude(bits)) ** 2

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class ErrorModel:
    """Coupling law + register geometry, with optional active-pair compensation.

    With ``compensate_active_pair`` on, the phase contribution of the site
    pair addressed by a two-qubit gate (swap included) is omitted for that
    step: entanglement picked up during an active gate is known in advance
    and absorbed into the gate itself.
    """

    law: CouplingLaw
    layout: RegisterLayout
    compensate_active_pair: bool = False


@dataclass(frozen=True)
class RunResult:
    final: StateVector
    steps_executed: int
    spacer_check: tuple[bool, ...] | None = None


# --- dense kernels --------------------------------------------------------


def _apply_1q(amps: np.ndarray, n: int, site: int, u: np.ndarray) -> np.ndarray:
    t = np.moveaxis(amps.reshape((2,) * n), site - 1, -1)
    return np.moveaxis(t @ u.T, -1, site - 1).reshape(-1)


def _apply_pair(amps: np.ndarray, n: int, qa: int, qb: int, u: np.ndarray) -> np.ndarray:
    # u acts on (qa, qb) in that slot order; qa need not be < qb
    t = np.moveaxis(amps.reshape((2,) * n), (qa - 1, qb - 1), (-2, -1))
    shape = t.shape
    t = (t.reshape(-1, 4) @ u.T).reshape(shape)
    return np.moveaxis(t, (-2, -1), (qa - 1, qb - 1)).reshape(-1)


def _apply_swap(amps: np.ndarray, n: int, site: int) -> np.ndarray:
    # pure axis exchange: exact, no arithmetic on the amplitudes
    t = np.swapaxes(amps.reshape((2,) * n), site - 1, site)
    return np.ascontiguousarray(t).reshape(-1)


@functools.lru_cache(maxsize=8)
def _phase_table(n: int, spacing: float, delta1: float, exponent: int, cutoff: float | None) -> np.ndarray:
    """error_phase evaluated for every basis index of an n-site register."""
    law = CouplingLaw(delta1, exponent, cutoff)
    idx = np.arange(1 << n, dtype=np.int64)
    phi = np.zeros(1 << n, dtype=float)
    for i in range(1, n + 1):
        bi = (idx >> (n - i)) & 1
        for j in range(i + 1, n + 1):
            c = coupling_strength(law, (j - i) * spacing)
            if c != 0.0:
                phi += c * ((bi ^ ((idx >> (n - j)) & 1)).astype(float))
    phi.setflags(write=False)
    return phi


def _error_phases(n: int, model: ErrorModel, exclude_pair: tuple[int, int] | None) -> np.ndarray:
    phi = _phase_table(n, model.layout.spacing, model.law.delta1, model.law.exponent, model.law.cutoff)
    if exclude_pair is None:
        return phi
    i, j = exclude_pair
    c = coupling_strength(model.law, abs(j - i) * model.layout.spacing)
    if c == 0.0:
        return phi
    idx = np.arange(1 << n, dtype=np.int64)
    xor = ((idx >> (n - i)) ^ (idx >> (n - j))) & 1
    return phi - c * xor.astype(float)


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Apply one basic gate (unitarity is enforced at gate construction)."""
    n = state.n
    if isinstance(gate, Gate1Q):
        if gate.qubit > n:
            raise ValueError(f"site {gate.qubit} out of range for {n} qubits")
        return StateVector(n, _apply_1q(state.amplitudes, n, gate.qubit, gate.matrix))
    if isinstance(gate, Gate2Q):
        if gate.qubit + 1 > n:
            raise ValueError(f"pair ({gate.qubit}, {gate.qubit + 1}) out of range for {n} qubits")
        return StateVector(n, _apply_pair(state.amplitudes, n, gate.qubit, gate.qubit + 1, gate.matrix))
    if isinstance(gate, SwapGate):
        if gate.site + 1 > n:
            raise ValueError(f"swap at {gate.site} out of range for {n} qubits")
        return StateVector(n, _apply_swap(state.amplitudes, n, gate.site))
    if isinstance(gate, WaitGate):
        return state
    raise UnsupportedGateError(f"cannot apply {gate!r}")


def apply_error_step(state: StateVector, model: ErrorModel, exclude_pair: tuple[int, int] | None = None) -> StateVector:
    """One crosstalk step: multiply each basis amplitude by exp(-i * error_phase)."""
    if model.layout.n_sites != state.n:
        raise ValueError("layout size does not match the state")
    phi = _error_phases(state.n, model, exclude_pair)
    return StateVector(state.n, state.amplitudes * np.exp(-1j * phi))


class _SiteTracker:
    """Tracks which physical site currently holds each data qubit / spacer."""

    def __init__(self, n_sites: int, m: int):
        if n_sites % m != 0:
            raise ValueError(f"register of {n_sites} sites is not a multiple of m={m}")
        self.n_sites = n_sites
        self.m = m
        self.n_logical = n_sites // m
        # contents[s] = logical index k for data, or 0 for a spacer (1-indexed sites)
        self.contents = [0] * (n_sites + 1)
        for k in range(1, self.n_logical + 1):
            self.contents[data_position(k, m)] = k

    def swap(self, site: int) -> None:
        c = self.contents
        c[site], c[site + 1] = c[site + 1], c[site]

    def data_at(self, site: int) -> int | None:
        k = self.contents[site]
        return k if k else None

    def data_sites(self) -> list[int]:
        """Site of each data qubit, indexed by logical qubit (entry 0 unused)."""
        sites = [0] * (self.n_logical + 1)
        for s in range(1, self.n_sites + 1):
            if self.contents[s]:
                sites[self.contents[s]] = s
        return sites

    def spacer_site_list(self) -> list[int]:
        return [s for s in range(1, self.n_sites + 1) if not self.contents[s]]

    def spacer_index_mask(self) -> int:
        mask = 0
        for s in self.spacer_site_list():
            mask |= 1 << (self.n_sites - s)
        return mask


def _spacers_clean(amps: np.ndarray, n: int, mask: int) -> bool:
    if mask == 0:
        return True
    idx = np.arange(1 << n, dtype=np.int64)
    good = float(np.sum(np.abs(amps[(idx & mask) == 0]) ** 2))
    return 1.0 - good <= SPACER_TOL


def run(
    circuit: PhysicalCircuit | LogicalCircuit,
    model: ErrorModel,
    initial: StateVector | None = None,
    encoding: EncodingParams | None = None,
) -> RunResult:
    """Serial full-register run: each gate, then one error step (waits: one per step).

    With ``encoding`` supplied, the run also tracks data-qubit positions
    through swaps and records a per-step verdict that every site currently
    holding a spacer measures |0> with probability 1 (within SPACER_TOL).
    """
    n = circuit.n_sites if isinstance(circuit, PhysicalCircuit) else circuit.n_qubits
    if n > MAX_QUBITS:
        raise CapacityError(f"{n} sites exceeds the dense cap of {MAX_QUBITS}")
    if model.layout.n_sites != n:
        raise ValueError("layout size does not match the circuit")
    if initial is None:
        initial = StateVector.zero(n)
    if initial.n != n:
        raise ValueError("initial state size does not match the circuit")

    tracker = _SiteTracker(n, encoding.m) if encoding is not None else None
    amps = initial.amplitudes.copy()
    verdicts: list[bool] = []
    steps = 0

    def error_step(active_pair: tuple[int, int] | None) -> None:
        nonlocal amps, steps
        exclude = active_pair if model.compensate_active_pair else None
        amps = amps * np.exp(-1j * _error_phases(n, model, exclude))
        steps += 1
        if tracker is not None:
            verdicts.append(_spacers_clean(amps, n, tracker.spacer_index_mask()))

    for gate in circuit.gates:
        if isinstance(gate, WaitGate):
            for _ in range(gate.steps):
                error_step(None)
            continue
        if isinstance(gate, Gate1Q):
            amps = _apply_1q(amps, n, gate.qubit, gate.matrix)
            error_step(None)
        elif isinstance(gate, Gate2Q):
            amps = _apply_pair(amps, n, gate.qubit, gate.qubit + 1, gate.matrix)
            error_step((gate.qubit, gate.qubit + 1))
        elif isinstance(gate, SwapGate):
            amps = _apply_swap(amps, n, gate.site)
            if tracker is not None:
                tracker.swap(gate.site)
            error_step((gate.site, gate.site + 1))
        else:
            raise UnsupportedGateError(f"cannot run {gate!r}")

    return RunResult(StateVector(n, amps), steps, tuple(verdicts) if tracker is not None else None)


# --- compressed engine ----------------------------------------------------


@functools.lru_cache(maxsize=8)
def _bit_table(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    table = np.empty((n + 1, 1 << n), dtype=np.uint8)  # row 0 unused; rows are 1-indexed
    for k in range(1, n + 1):
        table[k] = (idx >> (n - k)) & 1
    table.setflags(write=False)
    return table


def _compressed_phases(
    tracker: _SiteTracker,
    model: ErrorModel,
    exclude_pair: tuple[int, int] | None,
) -> np.ndarray:
    """Per-logical-basis-state phase of one error step, from current positions."""
    law, spacing = model.law, model.layout.spacing
    nl = tracker.n_logical
    sites = tracker.data_sites()
    spacers = tracker.spacer_site_list()
    excluded = set(exclude_pair) if exclude_pair is not None else set()
    bits = _bit_table(nl)
    phi = np.zeros(1 << nl, dtype=float)
    for k in range(1, nl + 1):
        for l in range(k + 1, nl + 1):
            if {sites[k], sites[l]} == excluded:
                continue
            c = coupling_strength(law, abs(sites[k] - sites[l]) * spacing)
            if c != 0.0:
                phi += c * (bits[k] ^ bits[l]).astype(float)
    for k in range(1, nl + 1):
        rate = 0.0
        for s in spacers:
            if {sites[k], s} == excluded:
                continue
            rate += coupling_strength(law, abs(sites[k] - s) * spacing)
        if rate != 0.0:
            phi += rate * bits[k].astype(float)
    # spacer-spacer pairs hold equal bits (0, 0) and contribute no phase
    return phi


def run_compressed(
    circuit: PhysicalCircuit,
    model: ErrorModel,
    encoding: EncodingParams,
    logical_initial: StateVector,
) -> StateVector:
    """Evolve only the 2^L logical amplitudes of a spacer-encoded circuit.

    Accepts circuits produced by ``compile_circuit``: every non-swap gate
    must address sites currently holding data qubits.  Agrees with the
    full-register run restricted to the data qubits.
    """
    n = circuit.n_sites
    if model.layout.n_sites != n:
        raise ValueError("layout size does not match the circuit")
    tracker = _SiteTracker(n, encoding.m)
    nl = tracker.n_logical
    if logical_initial.n != nl:
        raise ValueError(f"logical state has {logical_initial.n} qubits, expected {nl}")
    amps = logical_initial.amplitudes.copy()

    def error_step(active_pair: tuple[int, int] | None) -> None:
        nonlocal amps
        exclude = active_pair if model.compensate_active_pair else None
        amps = amps * np.exp(-1j * _compressed_phases(tracker, model, exclude))

    for gate in circuit.gates:
        if isinstance(gate, WaitGate):
            for _ in range(gate.steps):
                error_step(None)
            continue
        if isinstance(gate, Gate1Q):
            k = tracker.data_at(gate.qubit)
            if k is None:
                raise UnsupportedGateError(f"one-qubit gate on site {gate.qubit} addresses a spacer")
            amps = _apply_1q(amps, nl, k, gate.matrix)
            error_step(None)
        elif isinstance(gate, Gate2Q):
            ka, kb = tracker.data_at(gate.qubit), tracker.data_at(gate.qubit + 1)
            if ka is None or kb is None:
                raise UnsupportedGateError(
                    f"two-qubit gate on sites ({gate.qubit}, {gate.qubit + 1}) addresses a spacer"
                )
            amps = _apply_pair(amps, nl, ka, kb, gate.matrix)
            error_step((gate.qubit, gate.qubit + 1))
        elif isinstance(gate, SwapGate):
            tracker.swap(gate.site)
            error_step((gate.site, gate.site + 1))
        else:
            raise UnsupportedGateError(f"cannot run {gate!r}")

    return StateVector(nl, amps)


# --- state maps and measures ----------------------------------------------


def _encoded_indices(n_logical: int, m: int) -> np.ndarray:
    """Physical amplitude index of every logical basis state (home positions)."""
    n_phys = m * n_logical
    lidx = np.arange(1 << n_logical, dtype=np.int64)
    pidx = np.zeros(1 << n_logical, dtype=np.int64)
    for k in range(1, n_logical + 1):
        bit = (lidx >> (n_logical - k)) & 1
        pidx |= bit << (n_phys - data_position(k, m))
    return pidx


def encode_logical_state(logical: StateVector, m: int) -> StateVector:
    """Place logical amplitudes on data sites, spacers in |0> (home layout)."""
    n_phys = m * logical.n
    if n_phys > MAX_QUBITS:
        raise CapacityError(f"{n_phys} sites exceeds the dense cap of {MAX_QUBITS}")
    amps = np.zeros(1 << n_phys, dtype=complex)
    amps[_encoded_indices(logical.n, m)] = logical.amplitudes
    return StateVector(n_phys, amps)


def extract_logical_state(state: StateVector, m: int) -> StateVector:
    """Read the logical amplitudes back off the data sites (home layout)."""
    if state.n % m != 0:
        raise ValueError(f"register of {state.n} sites is not a multiple of m={m}")
    nl = state.n // m
    return StateVector(nl, state.amplitudes[_encoded_indices(nl, m)].copy())


def quality(state: StateVector, solutions: Iterable[str]) -> float:
    """Probability mass on the solution basis states: Q = sum |<s|psi>|^2."""
    seen = set()
    q = 0.0
    for s in solutions:
        if len(s) != state.n or any(c not in "01" for c in s):
            raise ValueError(f"solution {s!r} is not a {state.n}-bit string")
        if s in seen:
            continue
        seen.add(s)
        q += abs(state.amplitudes[int(s, 2)]) ** 2
    if not seen:
        raise ValueError("solution set must be non-empty")
    return min(max(q, 0.0), 1.0)


def align_global_phase(amplitudes: np.ndarray) -> np.ndarray:
    """Rotate so the largest-magnitude amplitude is real positive."""
    amps = np.asarray(amplitudes, dtype=complex)
    k = int(np.argmax(np.abs(amps)))
    a = amps[k]
    if abs(a) == 0.0:
        return amps.copy()
    return amps * (a.conjugate() / abs(a))


def states_close(a: np.ndarray, b: np.ndarray, tol: float = 1e-10) -> bool:
    """Amplitude-wise agreement after global-phase alignment."""
    if a.shape != b.shape:
        return False
    return bool(np.max(np.abs(align_global_phase(a) - align_global_phase(b))) <= tol)
