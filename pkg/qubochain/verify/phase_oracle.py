"""
This module contains the gate-level oracle for cost
layers. A cost layer maps every computational basis
state to a permuted basis state times a phase, so each
state is propagated exactly without a statevector.

With RZZ(2c gamma) and RZ(2b gamma), b_v = -2 c_v -
sum_j c_vj, the phase of state s is
-CONVENTION_SCALE * gamma * E(s) up to a global phase.
"""

import logging
from functools import cache

import numpy as np

from qubochain.circuit.decompose import swap_template
from qubochain.circuit.ir import Circuit, Gate, GateKind, Layout
from qubochain.exceptions.verify import (
	NonDiagonalGateError,
	VerificationError,
)
from qubochain.pubo.polynomial import Polynomial
from qubochain.utils.logging import stage
from qubochain.verify.brute_force import (
	check_size,
	energies,
	index_bits,
)

logger = logging.getLogger(__name__)

CONVENTION_SCALE = 4.0
PHASE_TOLERANCE = 1e-6
MAX_OCCUPIED = 20

TEMPLATE_LENGTH = len(swap_template(0, 1))


def _unitary(gate: Gate, a: int, b: int) -> np.ndarray:
	"""4x4 matrix of a template gate, qubit a as high bit."""
	sx = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])
	eye = np.eye(2)
	if gate.kind is GateKind.CZ:
		return np.diag([1, 1, 1, -1]).astype(complex)
	if gate.qubits == (a,):
		return np.kron(sx, eye)
	return np.kron(eye, sx)


@cache
def template_is_swap() -> bool:
	"""Whether the native SWAP template equals SWAP up to phase."""
	product = np.eye(4, dtype=complex)
	for gate in swap_template(0, 1):
		product = _unitary(gate, 0, 1) @ product

	swap = np.array(
		[[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
		dtype=complex,
	)
	overlap = np.vdot(swap, product) / 4
	return bool(
		np.isclose(abs(overlap), 1.0)
		and np.allclose(product, overlap * swap)
	)


def _is_template(gates: list[Gate], start: int) -> bool:
	head = gates[start]
	if head.kind is not GateKind.CZ:
		return False
	window = gates[start : start + TEMPLATE_LENGTH]
	return window == swap_template(*head.qubits)


def wrap_phase(phase: np.ndarray) -> np.ndarray:
	"""Map angles to (-pi, pi]."""
	return np.angle(np.exp(1j * phase))


def phase_oracle_check(
	circuit: Circuit,
	qubo: Polynomial,
	gamma: float,
	layout: Layout | None = None,
	offset: float = 0.0,
	*,
	tolerance: float = PHASE_TOLERANCE,
) -> tuple[bool, float]:
	"""
	Check that `circuit` applies exp(-i k gamma Q) up to
	the layout permutation, k = CONVENTION_SCALE.

	Args:
		circuit: Cost layer: RZ, RZZ, CZ, SWAP, the native
			SWAP template and barriers only.
		qubo: The QUBO the layer should realise.
		gamma: Cost angle used to build the layer.
		layout: Initial placement, by default the
			circuit's own.
		offset: Constant energy shift; it cancels in the
			phase differences and is only logged.

	Returns:
		Whether every phase difference matches within
		`tolerance` and the final permutation matches
		`circuit.final_layout`, and the largest phase
		error in radians.

	Raises:
		NonDiagonalGateError: H, RX, X or a lone SX.
		OracleSizeError: more than 20 variables.
	"""
	layout = dict(circuit.initial_layout if layout is None else layout)
	variables = tuple(sorted(layout))
	missing = [v for v in qubo.variables if v not in layout]
	if missing:
		raise VerificationError(
			'QUBO variables missing from the layout: '
			+ ', '.join(v.name for v in missing)
		)
	check_size(len(variables), MAX_OCCUPIED)

	touched = sorted(
		set(layout.values())
		| {q for g in circuit.gates for q in g.qubits}
	)
	column = {q: i for i, q in enumerate(touched)}

	assignments = index_bits(
		np.arange(1 << len(variables), dtype=np.int64),
		len(variables),
	)
	state = np.zeros((len(assignments), len(touched)), dtype=bool)
	for k, v in enumerate(variables):
		state[:, column[layout[v]]] = assignments[:, k]

	phase = np.zeros(len(assignments))
	position = dict(layout)

	def swap(a: int, b: int) -> None:
		ca, cb = column[a], column[b]
		state[:, [ca, cb]] = state[:, [cb, ca]]
		for v, q in position.items():
			if q == a:
				position[v] = b
			elif q == b:
				position[v] = a

	def spin(q: int) -> np.ndarray:
		return 1.0 - 2.0 * state[:, column[q]]

	gates = circuit.gates
	i = 0
	while i < len(gates):
		gate = gates[i]
		kind = gate.kind

		if kind is GateKind.CZ and _is_template(gates, i):
			if not template_is_swap():
				raise VerificationError(
					'Native SWAP template is not a SWAP'
				)
			swap(*gate.qubits)
			i += TEMPLATE_LENGTH
			continue

		if kind is GateKind.RZ:
			phase -= 0.5 * gate.param * spin(gate.qubits[0])
		elif kind is GateKind.RZZ:
			a, b = gate.qubits
			phase -= 0.5 * gate.param * spin(a) * spin(b)
		elif kind is GateKind.CZ:
			a, b = gate.qubits
			phase += np.pi * (
				state[:, column[a]] & state[:, column[b]]
			)
		elif kind is GateKind.SWAP:
			swap(*gate.qubits)
		elif kind is not GateKind.BARRIER:
			raise NonDiagonalGateError(
				f'{kind.value} is not diagonal up to a '
				'permutation',
				gate=kind.value,
				index=i,
			)
		i += 1

	energy = energies(qubo, variables, assignments)
	expected = -CONVENTION_SCALE * gamma * (energy - energy[0])
	error = np.abs(wrap_phase((phase - phase[0]) - expected))
	max_error = float(error.max())

	permutation_ok = position == circuit.final_layout
	ok = bool(max_error < tolerance) and permutation_ok

	logger.info(
		f'[PHASE] {len(assignments)} basis states, max error '
		f'{max_error:.3g} rad, offset {offset:g}, '
		f'permutation {"ok" if permutation_ok else "mismatch"}',
		extra=stage('verify'),
	)
	return ok, max_error


def permutation_matches(circuit: Circuit) -> bool:
	"""Whether replaying the SWAP content reaches `final_layout`."""
	position = dict(circuit.initial_layout)
	gates = circuit.gates
	i = 0
	while i < len(gates):
		gate = gates[i]
		if gate.kind is GateKind.SWAP or (
			gate.kind is GateKind.CZ and _is_template(gates, i)
		):
			a, b = gate.qubits
			for v, q in position.items():
				if q == a:
					position[v] = b
				elif q == b:
					position[v] = a
			if gate.kind is GateKind.CZ:
				i += TEMPLATE_LENGTH
				continue
		i += 1
	return position == circuit.final_layout
