"""
This module contains the interaction graph of a QUBO:
one vertex per variable and one weighted edge per
quadratic term.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from qubochain.exceptions.graph import DegreeTooHighError
from qubochain.pubo.polynomial import Pair, Polynomial, pair
from qubochain.pubo.variables import VarId, VarKind
from qubochain.schemas.graph import InteractionGraphDocument


@dataclass(frozen=True)
class InteractionGraph:
	vertices: tuple[VarId, ...]
	edges: Mapping[Pair, float]

	@cached_property
	def nx_graph(self) -> nx.Graph:
		graph = nx.Graph()
		graph.add_nodes_from(self.vertices)
		for (u, v), weight in sorted(self.edges.items()):
			graph.add_edge(u, v, weight=weight)
		return graph

	def weight(self, u: VarId, v: VarId) -> float:
		return self.edges.get(pair(u, v), 0.0)

	def degree(self, v: VarId) -> int:
		return self.nx_graph.degree(v)

	def neighbors(self, v: VarId) -> list[VarId]:
		return sorted(self.nx_graph.neighbors(v))

	def to_document(self) -> InteractionGraphDocument:
		return InteractionGraphDocument(
			vertices=[v.name for v in self.vertices],
			edges=[
				(u.name, v.name, w)
				for (u, v), w in sorted(self.edges.items())
			],
		)


def build_interaction_graph(
	qubo: Polynomial,
) -> InteractionGraph:
	"""
	Raises:
		DegreeTooHighError: `qubo` has a term of
			degree three or more.
	"""
	if qubo.degree > 2:
		raise DegreeTooHighError(
			'Interaction graphs need a QUBO',
			degree=qubo.degree,
		)

	return InteractionGraph(
		vertices=qubo.variables,
		edges=dict(sorted(qubo.quadratic_terms().items())),
	)


def to_dot(
	graph: InteractionGraph,
	*,
	highlight: set[Pair] | None = None,
	name: str = 'interaction',
) -> str:
	"""
	DOT text of the graph. Edges in `highlight` are
	drawn red, the way chain edges are shown.
	"""
	lines = [f'graph {name} {{']
	for v in graph.vertices:
		shape = 'box' if v.kind is VarKind.PROBLEM else 'ellipse'
		lines.append(f'\t"{v}" [shape={shape}];')

	for (u, v), weight in sorted(graph.edges.items()):
		color = (
			' color=red'
			if highlight and (u, v) in highlight
			else ''
		)
		lines.append(
			f'\t"{u}" -- "{v}" [label="{weight:g}"{color}];'
		)

	lines.append('}')
	return '\n'.join(lines) + '\n'
