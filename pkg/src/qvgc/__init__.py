"""Hybrid quantum-classical graph classification toolkit.

A dense statevector simulator, data-encoding feature maps, a variational
quantum classifier with parity readout, parameter-shift gradients, classical
optimizers (COBYLA, NFT, Adam), a compact message-passing GNN, and an
experiment pipeline tying them together.
"""

__version__ = "0.1.0"

from . import autodiff, circuits, encoders, gnn, metrics, optim, pipeline, statevec, vqc

__all__ = [
    "autodiff",
    "circuits",
    "encoders",
    "gnn",
    "metrics",
    "optim",
    "pipeline",
    "statevec",
    "vqc",
    "__version__",
]
