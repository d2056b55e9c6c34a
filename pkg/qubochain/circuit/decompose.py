"""
This module contains the native decomposition of SWAP
gates: three rounds of CZ followed by SX on both
qubits, which realise SWAP up to a global phase at
depth six.
"""

from qubochain.circuit.ir import Circuit, Gate, GateKind

TEMPLATE_ROUNDS = 3


def swap_template(a: int, b: int) -> list[Gate]:
	gates: list[Gate] = []
	for _ in range(TEMPLATE_ROUNDS):
		gates.append(Gate(GateKind.CZ, (a, b)))
		gates.append(Gate(GateKind.SX, (a,)))
		gates.append(Gate(GateKind.SX, (b,)))
	return gates


def decompose_swap(circuit: Circuit) -> Circuit:
	"""
	Replace every SWAP by `swap_template`. Layouts
	are carried over unchanged.
	"""
	gates: list[Gate] = []
	for gate in circuit.gates:
		if gate.kind is GateKind.SWAP:
			gates.extend(swap_template(*gate.qubits))
		else:
			gates.append(gate)

	return Circuit(
		num_qubits=circuit.num_qubits,
		initial_layout=circuit.initial_layout,
		gates=gates,
		final_layout=circuit.final_layout,
	)
