"""
This module is used to test the SWAP router for
extraneous couplings.
"""

import pytest

from qubochain.circuit.ir import Circuit, GateKind
from qubochain.compiler.routing import route_extraneous
from qubochain.device.topology import CouplingMap, line_map
from qubochain.exceptions.compiler import RoutingError
from qubochain.pubo.variables import x

# --- Test cases ---


def test_adjacent_pair():
	circuit = Circuit(3, initial_layout={x(1): 0, x(2): 1})

	route_extraneous(circuit, [(x(1), x(2), 0.5)], line_map(3), 1.0)

	assert [(g.kind, g.qubits) for g in circuit.gates] == [
		(GateKind.RZZ, (0, 1)),
	]


def test_distance_two_pair():
	circuit = Circuit(3, initial_layout={x(1): 0, x(2): 2})

	route_extraneous(circuit, [(x(1), x(2), 0.5)], line_map(3), 1.0)

	assert [(g.kind, g.qubits, g.param) for g in circuit.gates] == [
		(GateKind.SWAP, (0, 1), None),
		(GateKind.RZZ, (1, 2), 1.0),
	]
	assert circuit.final_layout == {x(1): 1, x(2): 2}


def test_nearest_pairs_are_routed_first():
	circuit = Circuit(
		5,
		initial_layout={x(1): 0, x(2): 1, x(3): 4},
	)

	route_extraneous(
		circuit,
		[(x(1), x(3), 1.0), (x(1), x(2), 1.0)],
		line_map(5),
		0.5,
	)

	assert circuit.gates[0].qubits == (0, 1)
	assert circuit.gates[0].kind is GateKind.RZZ
	assert circuit.count(GateKind.SWAP) == 3
	assert circuit.gates[-1].qubits == (3, 4)


def test_zero_coefficients_are_skipped():
	circuit = Circuit(3, initial_layout={x(1): 0, x(2): 2})

	route_extraneous(circuit, [(x(1), x(2), 0.0)], line_map(3), 1.0)

	assert len(circuit) == 0


def test_disconnected_endpoints():
	cmap = CouplingMap.from_edges(4, [(0, 1), (2, 3)])
	circuit = Circuit(4, initial_layout={x(1): 0, x(2): 3})

	with pytest.raises(RoutingError) as info:
		route_extraneous(circuit, [(x(1), x(2), 1.0)], cmap, 1.0)

	assert info.value.pair == 'x1*x2'


def test_layout_must_match():
	circuit = Circuit(3, initial_layout={x(1): 0, x(2): 2})

	with pytest.raises(ValueError):
		route_extraneous(
			circuit,
			[],
			line_map(3),
			1.0,
			layout={x(1): 1, x(2): 2},
		)
