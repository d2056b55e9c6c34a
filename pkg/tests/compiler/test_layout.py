"""
This module is used to test the placement of chains on
a hardware path.
"""

import pytest

from qubochain.compiler.layout import map_chains_to_path
from qubochain.device.paths import HardwarePath, longest_nn_path
from qubochain.device.presets import load_builtin
from qubochain.exceptions.compiler import (
	CapacityExceededError,
	UnsplitChainsError,
)
from qubochain.graph.chains import TriangleChain
from qubochain.pubo.variables import x, y

# --- Test Constants ---

LINE = HardwarePath(tuple(range(12)))

SHORT = TriangleChain(
	chain_id=0,
	path=(x(1), x(2), y(1), x(3), y(2)),
	triangles=((y(1), x(1), x(2)), (y(2), y(1), x(3))),
)
LONG = TriangleChain(
	chain_id=1,
	path=(x(4), x(5), y(3), x(6), y(4), x(7), y(5)),
	triangles=(
		(y(3), x(4), x(5)),
		(y(4), y(3), x(6)),
		(y(5), y(4), x(7)),
	),
)

# --- Test cases ---


def test_chains_are_packed_in_id_order():
	layout = map_chains_to_path([LONG, SHORT], LINE)

	assert [layout[v] for v in SHORT.path] == [0, 1, 2, 3, 4]
	assert [layout[v] for v in LONG.path] == list(range(5, 12))


def test_loose_variable_takes_first_qubit():
	path = HardwarePath((9, 4, 2))

	assert map_chains_to_path([], path, loose=[x(8)]) == {x(8): 9}


def test_chain_on_torino_path():
	path = longest_nn_path(load_builtin('ibm_torino'))
	chain = TriangleChain(
		chain_id=0,
		path=(x(4), x(3), y(1), x(2), y(2), x(1)),
		triangles=((y(1), x(3), x(4)), (y(2), y(1), x(2))),
	)

	layout = map_chains_to_path([chain], path)

	assert layout[x(4)] == 14
	assert [layout[v] for v in chain.path] == list(path.qubits[:6])


def test_capacity_exceeded():
	with pytest.raises(CapacityExceededError) as info:
		map_chains_to_path([LONG], HardwarePath((0, 1, 2)))

	assert info.value.required == 7
	assert info.value.available == 3


def test_shared_variable_is_rejected():
	with pytest.raises(UnsplitChainsError):
		map_chains_to_path([SHORT], LINE, loose=[x(1)])
