"""
This module contains the coupling map type and the
topology generators: heavy-hex lattices, lines and
fully connected maps.
"""

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
from pydantic import ValidationError

from qubochain.exceptions.device import (
	CouplingMapError,
	InvalidTopologyError,
)
from qubochain.schemas.device import CouplingMapDocument

Edge = tuple[int, int]


@dataclass(frozen=True)
class CouplingMap:
	"""Undirected connectivity of a device."""

	num_qubits: int
	edges: frozenset[Edge]
	name: str = 'custom'
	description: str | None = field(default=None, compare=False)

	def __post_init__(self) -> None:
		for a, b in self.edges:
			if a == b:
				raise CouplingMapError(
					'Coupling map contains a self-loop',
					detail=f'qubit {a}',
				)
			if a > b:
				raise CouplingMapError(
					'Edges must be stored as (low, high)',
					detail=f'({a}, {b})',
				)
			if b >= self.num_qubits or a < 0:
				raise CouplingMapError(
					'Edge endpoint outside the device',
					detail=f'({a}, {b})',
				)

	@classmethod
	def from_edges(
		cls,
		num_qubits: int,
		edges: Iterable[Edge],
		*,
		name: str = 'custom',
		description: str | None = None,
	) -> 'CouplingMap':
		normalized: set[Edge] = set()
		for a, b in edges:
			if a == b:
				raise CouplingMapError(
					'Coupling map contains a self-loop',
					detail=f'qubit {a}',
				)
			normalized.add((min(a, b), max(a, b)))
		return cls(
			num_qubits=num_qubits,
			edges=frozenset(normalized),
			name=name,
			description=description,
		)

	@cached_property
	def graph(self) -> nx.Graph:
		graph = nx.Graph()
		graph.add_nodes_from(range(self.num_qubits))
		graph.add_edges_from(sorted(self.edges))
		return graph

	def is_coupled(self, a: int, b: int) -> bool:
		return (min(a, b), max(a, b)) in self.edges

	def degree(self, q: int) -> int:
		return self.graph.degree(q)

	def neighbors(self, q: int) -> list[int]:
		return sorted(self.graph.neighbors(q))

	@property
	def max_degree(self) -> int:
		return max(
			(d for _, d in self.graph.degree()),
			default=0,
		)

	def distance(self, a: int, b: int) -> int | None:
		try:
			return nx.shortest_path_length(self.graph, a, b)
		except nx.NetworkXNoPath:
			return None

	def components(self) -> list[set[int]]:
		return [
			set(c) for c in nx.connected_components(self.graph)
		]

	def to_document(self) -> CouplingMapDocument:
		return CouplingMapDocument(
			name=self.name,
			description=self.description,
			num_qubits=self.num_qubits,
			edges=sorted(self.edges),
		)

	def to_json(self, *, indent: int | None = None) -> str:
		return self.to_document().model_dump_json(
			indent=indent,
			exclude_none=True,
		)


def load_coupling_map(data: str | bytes) -> CouplingMap:
	"""
	Parse and validate a coupling map document.

	Raises:
		CouplingMapError: malformed JSON, out-of-range
			endpoint or self-loop.
	"""
	try:
		document = CouplingMapDocument.model_validate_json(data)
	except ValidationError as e:
		raise CouplingMapError(
			'Invalid coupling map document',
			detail='; '.join(
				err['msg'] for err in e.errors()
			),
		) from e

	return CouplingMap.from_edges(
		document.num_qubits,
		document.edges,
		name=document.name,
		description=document.description,
	)


def heavy_hex(
	rows: int,
	cols: int,
	*,
	name: str | None = None,
) -> CouplingMap:
	"""
	Heavy-hex lattice laid out row-major.

	Each of the `rows` rows is a line of 4 * cols + 3
	qubits and is followed by cols + 1 bridge qubits.
	Bridges below an even row sit at columns 0, 4, 8,
	... and bridges below an odd row at columns 2, 6,
	10, ... so the cells form a brick wall. The bridges
	after the last row hang off it with degree one.

	`heavy_hex(7, 3)` is the 133-qubit ibm_torino
	layout.
	"""
	if rows < 1 or cols < 1:
		raise InvalidTopologyError(
			f'Heavy-hex needs rows, cols >= 1, got '
			f'{rows}x{cols}'
		)

	row_length = 4 * cols + 3
	block = row_length + cols + 1
	edges: list[Edge] = []

	for r in range(rows):
		start = r * block
		edges.extend(
			(start + j, start + j + 1)
			for j in range(row_length - 1)
		)

		offset = 0 if r % 2 == 0 else 2
		for k in range(cols + 1):
			column = offset + 4 * k
			bridge = start + row_length + k
			edges.append((start + column, bridge))
			if r + 1 < rows:
				edges.append((bridge, start + block + column))

	return CouplingMap.from_edges(
		rows * block,
		edges,
		name=name or f'heavy_hex_{rows}x{cols}',
		description=(
			f'{rows} rows of {row_length} qubits, each '
			f'followed by {cols + 1} bridge qubits; '
			'row-major indexing'
		),
	)


def line_map(num_qubits: int) -> CouplingMap:
	if num_qubits < 1:
		raise InvalidTopologyError('A line needs one qubit')
	return CouplingMap.from_edges(
		num_qubits,
		((q, q + 1) for q in range(num_qubits - 1)),
		name=f'line_{num_qubits}',
	)


def complete_map(num_qubits: int) -> CouplingMap:
	if num_qubits < 1:
		raise InvalidTopologyError(
			'A complete map needs one qubit'
		)
	return CouplingMap.from_edges(
		num_qubits,
		(
			(a, b)
			for a in range(num_qubits)
			for b in range(a + 1, num_qubits)
		),
		name=f'complete_{num_qubits}',
	)
