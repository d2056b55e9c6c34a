"""
This module contains the greedy nearest-neighbour path
search used to lay chains out on a device.
"""

import logging
from dataclasses import dataclass

from qubochain.device.topology import CouplingMap
from qubochain.exceptions.device import EmptyDeviceError
from qubochain.utils.logging import stage

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HardwarePath:
	"""Simple path of coupled physical qubits."""

	qubits: tuple[int, ...]

	def __post_init__(self) -> None:
		if len(set(self.qubits)) != len(self.qubits):
			raise ValueError('Hardware path repeats a qubit')

	def __len__(self) -> int:
		return len(self.qubits)

	def __getitem__(self, index: int) -> int:
		return self.qubits[index]

	def is_valid_for(self, cmap: CouplingMap) -> bool:
		return all(
			cmap.is_coupled(a, b)
			for a, b in zip(
				self.qubits,
				self.qubits[1:],
				strict=False,
			)
		)


def start_qubit(cmap: CouplingMap) -> int:
	"""
	Lowest-index qubit of degree one, else the
	lowest-index qubit of minimum degree.
	"""
	degrees = sorted(
		(cmap.degree(q), q) for q in range(cmap.num_qubits)
	)
	for degree, q in degrees:
		if degree == 1:
			return q
	return degrees[0][1]


def longest_nn_path(cmap: CouplingMap) -> HardwarePath:
	"""
	Greedy long path: from `start_qubit`, repeatedly
	step to the unvisited neighbour whose index is
	closest to the current one (ties to the smaller
	index) until none is left. No backtracking.

	Raises:
		EmptyDeviceError: the map has no qubits.
	"""
	if cmap.num_qubits == 0:
		raise EmptyDeviceError(
			f'Coupling map {cmap.name!r} has no qubits'
		)

	current = start_qubit(cmap)
	path = [current]
	visited = {current}

	while True:
		options = [
			q for q in cmap.neighbors(current) if q not in visited
		]
		if not options:
			break
		current = min(
			options,
			key=lambda q: (abs(q - current), q),
		)
		path.append(current)
		visited.add(current)

	logger.debug(
		f'[{cmap.name}] Path of length {len(path)} from '
		f'qubit {path[0]}',
		extra=stage('device'),
	)
	return HardwarePath(tuple(path))
