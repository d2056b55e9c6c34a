"""
This module contains the connectivity check of a
circuit against a device coupling map.
"""

from dataclasses import dataclass

from qubochain.circuit.ir import Circuit, Gate, GateKind
from qubochain.device.topology import CouplingMap
from qubochain.exceptions.circuit import CircuitError


@dataclass(frozen=True)
class Violation:
	index: int
	gate: Gate

	def __str__(self) -> str:
		return f'gate {self.index}: {self.gate}'


def check_connectivity(
	circuit: Circuit,
	cmap: CouplingMap,
) -> list[Violation]:
	"""
	Every two-qubit gate acting on an uncoupled pair.
	An empty list means the circuit is compliant.
	"""
	if circuit.num_qubits > cmap.num_qubits:
		raise CircuitError(
			f'{circuit.num_qubits}-qubit circuit does not fit '
			f'{cmap.name} ({cmap.num_qubits} qubits)'
		)

	return [
		Violation(index, gate)
		for index, gate in enumerate(circuit.gates)
		if gate.kind is not GateKind.BARRIER
		and gate.is_two_qubit
		and not cmap.is_coupled(*gate.qubits)
	]
