"""Dense statevector simulator.

Conventions, fixed once and used everywhere:

* Qubit 0 is the **least significant bit** of the basis index, so for two
  qubits the amplitude order is |00>, |01>, |10>, |11> with the *right* digit
  being qubit 0.
* Rotation gates follow the half-angle convention
  ``RZ(t) = exp(-i t Z / 2)``, ``RZZ(t) = exp(-i t Z(x)Z / 2)`` and likewise
  for RX/RY.

Gate application uses in-place stride kernels (O(2^n) per gate). The kernels
accept arrays of shape ``(..., 2**n)`` so the same code path serves a single
state or a batch of states; :class:`Statevector` wraps the single-state case.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError

MAX_QUBITS = 24

_SQRT1_2 = 1.0 / math.sqrt(2.0)
_T_PHASE = complex(math.cos(math.pi / 4), math.sin(math.pi / 4))


class GateKind(str, enum.Enum):
    H = "H"
    X = "X"
    Y = "Y"
    Z = "Z"
    S = "S"
    T = "T"
    CNOT = "CNOT"
    RX = "RX"
    RY = "RY"
    RZ = "RZ"
    RZZ = "RZZ"


ROTATION_KINDS = frozenset({GateKind.RX, GateKind.RY, GateKind.RZ, GateKind.RZZ})
TWO_QUBIT_KINDS = frozenset({GateKind.CNOT, GateKind.RZZ})


class ObservableKind(str, enum.Enum):
    PARITY_Z = "ParityZ"


@dataclass(frozen=True)
class Observable:
    """Measurement observable. Only the all-Z parity operator is supported."""

    kind: ObservableKind = ObservableKind.PARITY_Z


PARITY_Z = Observable(ObservableKind.PARITY_Z)


@dataclass
class Statevector:
    """Complex amplitude vector of an ``n_qubits`` pure state."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if not (1 <= self.n_qubits <= MAX_QUBITS):
            raise CapacityError(
                f"n_qubits={self.n_qubits} outside supported range 1..{MAX_QUBITS}"
            )
        self.amplitudes = np.asarray(self.amplitudes, dtype=np.complex128)
        if self.amplitudes.shape != (1 << self.n_qubits,):
            raise ValueError(
                f"expected {1 << self.n_qubits} amplitudes, got {self.amplitudes.shape}"
            )

    def copy(self) -> "Statevector":
        return Statevector(self.n_qubits, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def zero_state(n_qubits: int) -> Statevector:
    """Return |0...0> on ``n_qubits`` qubits."""
    if not (1 <= n_qubits <= MAX_QUBITS):
        raise CapacityError(f"n_qubits={n_qubits} outside supported range 1..{MAX_QUBITS}")
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return Statevector(n_qubits, amps)


# ---------------------------------------------------------------------------
# Stride kernels. ``arr`` has shape (..., 2**n); mutation is in place.
# Axis layout after reshape: (batch, high bits, target bit, low bits).
# ---------------------------------------------------------------------------


def _split_1q(arr: np.ndarray, n: int, q: int) -> np.ndarray:
    pre = 1 << (n - 1 - q)
    post = 1 << q
    return arr.reshape(-1, pre, 2, post)


def _apply_matrix_1q(arr: np.ndarray, n: int, q: int, u: np.ndarray) -> None:
    view = _split_1q(arr, n, q)
    a = view[:, :, 0, :].copy()
    b = view[:, :, 1, :]
    view[:, :, 0, :] = u[0, 0] * a + u[0, 1] * b
    view[:, :, 1, :] = u[1, 0] * a + u[1, 1] * b


def _apply_h(arr: np.ndarray, n: int, q: int) -> None:
    view = _split_1q(arr, n, q)
    a = view[:, :, 0, :].copy()
    b = view[:, :, 1, :]
    view[:, :, 0, :] = (a + b) * _SQRT1_2
    view[:, :, 1, :] = (a - b) * _SQRT1_2


def _apply_x(arr: np.ndarray, n: int, q: int) -> None:
    view = _split_1q(arr, n, q)
    a = view[:, :, 0, :].copy()
    view[:, :, 0, :] = view[:, :, 1, :]
    view[:, :, 1, :] = a


def _apply_phase(arr: np.ndarray, n: int, q: int, phase: complex) -> None:
    view = _split_1q(arr, n, q)
    view[:, :, 1, :] *= phase


def _apply_rz(arr: np.ndarray, n: int, q: int, theta: float) -> None:
    view = _split_1q(arr, n, q)
    half = 0.5 * theta
    view[:, :, 0, :] *= complex(math.cos(half), -math.sin(half))
    view[:, :, 1, :] *= complex(math.cos(half), math.sin(half))


def _split_2q(arr: np.ndarray, n: int, qa: int, qb: int) -> np.ndarray:
    hi, lo = (qa, qb) if qa > qb else (qb, qa)
    pre = 1 << (n - 1 - hi)
    mid = 1 << (hi - lo - 1)
    post = 1 << lo
    # axes: (batch, pre, bit hi, mid, bit lo, post)
    return arr.reshape(-1, pre, 2, mid, 2, post)


def _apply_cnot(arr: np.ndarray, n: int, control: int, target: int) -> None:
    view = _split_2q(arr, n, control, target)
    if control > target:
        sub0 = view[:, :, 1, :, 0, :].copy()
        view[:, :, 1, :, 0, :] = view[:, :, 1, :, 1, :]
        view[:, :, 1, :, 1, :] = sub0
    else:
        sub0 = view[:, :, 0, :, 1, :].copy()
        view[:, :, 0, :, 1, :] = view[:, :, 1, :, 1, :]
        view[:, :, 1, :, 1, :] = sub0


def _apply_rzz(arr: np.ndarray, n: int, qa: int, qb: int, theta: float) -> None:
    view = _split_2q(arr, n, qa, qb)
    half = 0.5 * theta
    same = complex(math.cos(half), -math.sin(half))
    diff = complex(math.cos(half), math.sin(half))
    view[:, :, 0, :, 0, :] *= same
    view[:, :, 1, :, 1, :] *= same
    view[:, :, 0, :, 1, :] *= diff
    view[:, :, 1, :, 0, :] *= diff


def _rx_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


def _ry_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


_Y_MATRIX = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)


def apply_kind(
    arr: np.ndarray,
    n_qubits: int,
    kind: GateKind,
    targets: tuple[int, ...],
    angle: float | None = None,
) -> None:
    """Apply one gate in place to ``arr`` of shape (..., 2**n_qubits).

    This is the raw kernel dispatcher; it assumes targets were validated.
    """
    if kind is GateKind.H:
        _apply_h(arr, n_qubits, targets[0])
    elif kind is GateKind.X:
        _apply_x(arr, n_qubits, targets[0])
    elif kind is GateKind.Y:
        _apply_matrix_1q(arr, n_qubits, targets[0], _Y_MATRIX)
    elif kind is GateKind.Z:
        _apply_phase(arr, n_qubits, targets[0], -1.0)
    elif kind is GateKind.S:
        _apply_phase(arr, n_qubits, targets[0], 1j)
    elif kind is GateKind.T:
        _apply_phase(arr, n_qubits, targets[0], _T_PHASE)
    elif kind is GateKind.RX:
        _apply_matrix_1q(arr, n_qubits, targets[0], _rx_matrix(angle))
    elif kind is GateKind.RY:
        _apply_matrix_1q(arr, n_qubits, targets[0], _ry_matrix(angle))
    elif kind is GateKind.RZ:
        _apply_rz(arr, n_qubits, targets[0], angle)
    elif kind is GateKind.CNOT:
        _apply_cnot(arr, n_qubits, targets[0], targets[1])
    elif kind is GateKind.RZZ:
        _apply_rzz(arr, n_qubits, targets[0], targets[1], angle)
    else:  # pragma: no cover - exhaustive over GateKind
        raise ValueError(f"unknown gate kind {kind!r}")


def _validate_targets(kind: GateKind, targets: tuple[int, ...], n_qubits: int) -> tuple[int, ...]:
    targets = tuple(int(t) for t in targets)
    expected = 2 if kind in TWO_QUBIT_KINDS else 1
    if len(targets) != expected:
        raise ValueError(f"{kind.value} takes {expected} target(s), got {len(targets)}")
    for t in targets:
        if not (0 <= t < n_qubits):
            raise IndexError(f"target {t} out of range for {n_qubits} qubits")
    if len(set(targets)) != len(targets):
        raise ValueError(f"duplicate targets {targets}")
    return targets


def apply_gate(
    state: Statevector,
    kind: GateKind | str,
    targets: tuple[int, ...] | list[int] | int,
    angle: float | None = None,
) -> Statevector:
    """Apply a gate to ``state`` in place and return it.

    ``kind`` is one of H, X, Y, Z, S, T, CNOT, RX, RY, RZ, RZZ. Rotation
    kinds require ``angle``; for CNOT the first target is the control.
    """
    kind = GateKind(kind)
    if isinstance(targets, int):
        targets = (targets,)
    targets = _validate_targets(kind, tuple(targets), state.n_qubits)
    if kind in ROTATION_KINDS:
        if angle is None:
            raise ValueError(f"{kind.value} requires an angle")
        angle = float(angle)
    elif angle is not None:
        raise ValueError(f"{kind.value} takes no angle")
    apply_kind(state.amplitudes, state.n_qubits, kind, targets, angle)
    return state


_parity_cache: dict[int, np.ndarray] = {}


def parity_signs(n_qubits: int) -> np.ndarray:
    """(-1)**popcount(x) for every basis index x, as a float64 array."""
    cached = _parity_cache.get(n_qubits)
    if cached is None:
        idx = np.arange(1 << n_qubits, dtype=np.uint32)
        bits = np.zeros(idx.shape, dtype=np.uint32)
        for q in range(n_qubits):
            bits += (idx >> q) & 1
        cached = np.where(bits % 2 == 0, 1.0, -1.0)
        _parity_cache[n_qubits] = cached
    return cached


def expectation(state: Statevector, obs: Observable = PARITY_Z) -> float:
    """<state| Z(x)...(x)Z |state> for the all-Z parity observable."""
    if obs.kind is not ObservableKind.PARITY_Z:
        raise ValueError(f"unsupported observable {obs.kind!r}")
    return float(np.dot(parity_signs(state.n_qubits), state.probabilities()))


def expectation_batch(amps: np.ndarray, n_qubits: int) -> np.ndarray:
    """Parity-Z expectations for a batch of amplitude rows, shape (..., 2**n)."""
    probs = np.abs(amps) ** 2
    return probs @ parity_signs(n_qubits)


def sample(state: Statevector, shots: int, seed: int) -> dict[int, int]:
    """Draw ``shots`` basis-state outcomes from |amplitudes|^2.

    Returns a sparse {basis index: count} map; zero-probability outcomes
    never appear. Deterministic for a fixed seed.
    """
    if shots < 1:
        raise ValueError("shots must be >= 1")
    probs = state.probabilities()
    probs = np.clip(probs, 0.0, None)
    total = probs.sum()
    if total <= 0.0:
        raise ValueError("state has zero norm; cannot sample")
    probs = probs / total
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, probs)
    return {int(i): int(c) for i, c in enumerate(counts) if c > 0}
