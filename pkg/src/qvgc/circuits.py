"""Circuit intermediate representation.

A :class:`Circuit` is an ordered gate list over a fixed qubit count. Rotation
gates may reference a parameter slot through an affine expression
``a * p[slot] + b``; :func:`bind` substitutes concrete values. Circuits are
immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UnboundParameterError
from .statevec import (
    ROTATION_KINDS,
    TWO_QUBIT_KINDS,
    GateKind,
    Statevector,
    apply_kind,
)


@dataclass(frozen=True)
class ParamRef:
    """Affine reference ``scale * p[slot] + offset`` to a parameter slot."""

    slot: int
    scale: float = 1.0
    offset: float = 0.0

    def evaluate(self, values: np.ndarray) -> float:
        return self.scale * float(values[self.slot]) + self.offset


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    targets: tuple[int, ...]
    angle: float | None = None
    param: ParamRef | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        expected = 2 if self.kind in TWO_QUBIT_KINDS else 1
        if len(self.targets) != expected:
            raise ValueError(
                f"{self.kind.value} takes {expected} target(s), got {len(self.targets)}"
            )
        if len(set(self.targets)) != len(self.targets):
            raise ValueError(f"duplicate targets {self.targets}")
        if self.kind in ROTATION_KINDS:
            if (self.angle is None) == (self.param is None):
                raise ValueError(
                    f"{self.kind.value} needs exactly one of a fixed angle or a parameter"
                )
        else:
            if self.angle is not None or self.param is not None:
                raise ValueError(f"{self.kind.value} takes no angle")

    @property
    def is_symbolic(self) -> bool:
        return self.param is not None


@dataclass(frozen=True)
class Circuit:
    """Ordered gate sequence on ``n_qubits`` qubits with ``n_params`` free slots."""

    n_qubits: int
    gates: tuple[Gate, ...] = ()
    n_params: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            for t in g.targets:
                if not (0 <= t < self.n_qubits):
                    raise IndexError(f"gate target {t} out of range for {self.n_qubits} qubits")
            if g.param is not None and not (0 <= g.param.slot < self.n_params):
                raise ValueError(f"parameter slot {g.param.slot} >= n_params={self.n_params}")

    @property
    def is_concrete(self) -> bool:
        return self.n_params == 0

    def dump(self) -> str:
        """One gate per line: ``KIND targets angle`` (debug / golden files)."""
        lines = []
        for g in self.gates:
            tgt = ",".join(str(t) for t in g.targets)
            if g.param is not None:
                p = g.param
                if p.scale == 1.0 and p.offset == 0.0:
                    ang = f"p{p.slot}"
                else:
                    ang = f"{p.scale!r}*p{p.slot}{p.offset:+}"
            elif g.angle is not None:
                ang = repr(g.angle)
            else:
                ang = "-"
            lines.append(f"{g.kind.value} {tgt} {ang}")
        return "\n".join(lines)


def bind(circuit: Circuit, values) -> Circuit:
    """Substitute parameter values, returning a fully concrete circuit."""
    values = np.asarray(values, dtype=np.float64)
    if values.shape != (circuit.n_params,):
        raise ValueError(f"expected {circuit.n_params} values, got {values.shape}")
    if circuit.n_params == 0:
        return circuit
    gates = tuple(
        Gate(g.kind, g.targets, angle=g.param.evaluate(values)) if g.param is not None else g
        for g in circuit.gates
    )
    return Circuit(circuit.n_qubits, gates, 0)


def run(circuit: Circuit, initial: Statevector) -> Statevector:
    """Execute a concrete circuit on a copy of ``initial``."""
    if not circuit.is_concrete:
        raise UnboundParameterError(
            f"circuit has {circuit.n_params} unbound parameter(s); bind() first"
        )
    if circuit.n_qubits != initial.n_qubits:
        raise ValueError(
            f"circuit is on {circuit.n_qubits} qubits, state on {initial.n_qubits}"
        )
    state = initial.copy()
    run_inplace(circuit, state.amplitudes)
    return state


def run_inplace(circuit: Circuit, amps: np.ndarray) -> None:
    """Apply a concrete circuit's gates in place to shape (..., 2**n) amplitudes."""
    n = circuit.n_qubits
    for g in circuit.gates:
        if g.param is not None:
            raise UnboundParameterError("circuit has unbound parameters")
        apply_kind(amps, n, g.kind, g.targets, g.angle)


def compose(a: Circuit, b: Circuit) -> Circuit:
    """Concatenate two circuits; b's parameter slots are shifted after a's."""
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"qubit count mismatch: {a.n_qubits} vs {b.n_qubits}")
    shifted = tuple(
        Gate(
            g.kind,
            g.targets,
            angle=g.angle,
            param=ParamRef(g.param.slot + a.n_params, g.param.scale, g.param.offset)
            if g.param is not None
            else None,
        )
        for g in b.gates
    )
    return Circuit(a.n_qubits, a.gates + shifted, a.n_params + b.n_params)
