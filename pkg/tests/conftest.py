"""Shared generators for randomized checks. Every test seeds its own rng so
failures reproduce exactly."""

from __future__ import annotations

import numpy as np

from photonc.circuit import Gate, GateKind, QuantumCircuit
from photonc.compiler import QubitAssignment


def haar_u2(rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed 2x2 unitary via QR of a complex Ginibre sample."""
    z = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q @ np.diag(np.diag(r) / np.abs(np.diag(r)))


def random_gate(rng: np.random.Generator, n_qubits: int) -> Gate:
    kinds = [k for k in GateKind if k.n_qubits <= n_qubits]
    kind = kinds[int(rng.integers(len(kinds)))]
    qubits = tuple(int(q) for q in rng.choice(n_qubits, size=kind.n_qubits, replace=False))
    if kind is GateKind.PHASE:
        return Gate(kind, qubits, (float(rng.uniform(-2 * np.pi, 2 * np.pi)),))
    if kind is GateKind.U2:
        return Gate(kind, qubits, tuple(float(x) for x in rng.uniform(-np.pi, np.pi, size=4)))
    return Gate(kind, qubits)


def random_circuit(rng: np.random.Generator, n_qubits: int, n_gates: int) -> QuantumCircuit:
    return QuantumCircuit(n_qubits, tuple(random_gate(rng, n_qubits) for _ in range(n_gates)))


def random_assignment(
    rng: np.random.Generator, n_qubits: int, allow_pol: bool = True
) -> QubitAssignment:
    # A polarization qubit needs a location qubit left over for the swap
    # trick, so single-qubit assignments stay all-path.
    pol = None
    if allow_pol and n_qubits >= 2 and rng.random() < 0.5:
        pol = int(rng.integers(n_qubits))
    order = tuple(int(q) for q in rng.permutation(n_qubits) if q != pol)
    return QubitAssignment(n_qubits, order, pol)
