"""
This module is used to test coupling maps, their
generators and the device specifiers.
"""

import pytest

from qubochain.device.presets import load_builtin, resolve_device
from qubochain.device.topology import (
	CouplingMap,
	complete_map,
	heavy_hex,
	line_map,
	load_coupling_map,
)
from qubochain.exceptions.device import (
	CouplingMapError,
	InvalidTopologyError,
	UnknownDeviceError,
)

# --- Test cases ---


def test_torino_preset():
	cmap = load_builtin('ibm_torino')

	assert cmap.num_qubits == 133
	assert cmap.max_degree == 3
	assert len(cmap.components()) == 1
	assert cmap.edges == heavy_hex(7, 3).edges


def test_single_row_heavy_hex():
	cmap = heavy_hex(1, 1)

	# One row of 7 qubits and two bridges hanging off it
	assert cmap.num_qubits == 9
	assert cmap.max_degree <= 3
	assert cmap.degree(7) == 1
	assert cmap.degree(8) == 1


def test_heavy_hex_rejects_empty_lattice():
	with pytest.raises(InvalidTopologyError):
		heavy_hex(0, 3)


def test_load_coupling_map():
	cmap = load_coupling_map(
		'{"num_qubits":3,"edges":[[0,1],[1,2]]}'
	)

	assert cmap.edges == line_map(3).edges
	assert cmap.distance(0, 2) == 2


def test_load_coupling_map_errors():
	test_cases = [
		'{"num_qubits":2,"edges":[[0,0]]}',
		'{"num_qubits":2,"edges":[[0,5]]}',
		'{"edges":[[0,1]]}',
		'not json',
	]

	for text in test_cases:
		with pytest.raises(CouplingMapError):
			load_coupling_map(text)


def test_edges_are_normalized():
	cmap = CouplingMap.from_edges(3, [(2, 1), (1, 0), (0, 1)])

	assert cmap.edges == frozenset({(0, 1), (1, 2)})
	assert cmap.is_coupled(2, 1)
	assert not cmap.is_coupled(0, 2)


def test_disconnected_distance():
	cmap = CouplingMap.from_edges(4, [(0, 1), (2, 3)])

	assert cmap.distance(0, 3) is None
	assert len(cmap.components()) == 2


def test_json_round_trip():
	cmap = line_map(4)

	assert load_coupling_map(cmap.to_json()) == cmap


def test_resolve_device():
	assert resolve_device('line:5') == line_map(5)
	assert resolve_device('complete:4') == complete_map(4)
	assert resolve_device('heavy-hex:2,1').num_qubits == 18

	test_cases = ['ring:4', 'line:four', 'builtin:nope']
	for specifier in test_cases:
		with pytest.raises(UnknownDeviceError):
			resolve_device(specifier)
