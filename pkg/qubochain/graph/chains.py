"""
This module contains the recovery of triangle chains
from a quadratized problem: the traversal path of each
chain, the relation between pairs of chains and the
split of the interaction graph edges into chain edges
and extraneous edges.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from qubochain.exceptions.graph import InconsistentChainError
from qubochain.graph.interaction import InteractionGraph
from qubochain.pubo.polynomial import Pair, pair
from qubochain.pubo.variables import VarId
from qubochain.quadratizer.problem import Substitution
from qubochain.schemas.graph import ChainDocument
from qubochain.utils.logging import stage

logger = logging.getLogger(__name__)

Triangle = tuple[VarId, VarId, VarId]


class ChainRelation(str, Enum):
	INDEPENDENT = 'independent'
	BIFURCATION = 'bifurcation'
	OVERLAP = 'overlap'


@dataclass(frozen=True)
class TriangleChain:
	"""
	One chain of triangles.

	`path` lists the chain vertices in the order they
	are placed on a line of qubits. Triangles are
	`(aux, factor_a, factor_b)` in substitution order.
	"""

	chain_id: int
	path: tuple[VarId, ...]
	triangles: tuple[Triangle, ...]

	@property
	def vertices(self) -> frozenset[VarId]:
		return frozenset(self.path)

	@property
	def triangle_vertices(self) -> frozenset[VarId]:
		return frozenset(v for t in self.triangles for v in t)

	@property
	def auxiliaries(self) -> frozenset[VarId]:
		return frozenset(t[0] for t in self.triangles)

	@property
	def pendant(self) -> VarId | None:
		"""Terminal vertex outside every triangle."""
		last = self.path[-1]
		return None if last in self.triangle_vertices else last

	def edges(self) -> set[Pair]:
		"""Triangle edges plus the pendant edge."""
		found: set[Pair] = set()
		for aux, a, b in self.triangles:
			found.update((pair(a, b), pair(a, aux), pair(b, aux)))
		if self.pendant is not None:
			found.add(pair(self.path[-2], self.path[-1]))
		return found

	def position(self, v: VarId) -> int:
		return self.path.index(v)

	def __len__(self) -> int:
		return len(self.path)

	def to_document(self) -> ChainDocument:
		return ChainDocument(
			chain_id=self.chain_id,
			path=[v.name for v in self.path],
			triangles=[
				(aux.name, a.name, b.name)
				for aux, a, b in self.triangles
			],
		)


@dataclass(frozen=True)
class EdgeClassification:
	chain_edges: frozenset[Pair]
	extraneous_edges: frozenset[Pair]


def group_by_chain(
	substitutions: Iterable[Substitution],
) -> dict[int, list[Substitution]]:
	groups: dict[int, list[Substitution]] = {}
	for sub in substitutions:
		groups.setdefault(sub.chain_id, []).append(sub)
	return dict(sorted(groups.items()))


def extract_chains(
	graph: InteractionGraph,
	substitutions: Sequence[Substitution],
) -> list[TriangleChain]:
	"""
	Build the traversal path of every chain.

	The path starts with the two factors of the first
	substitution (lower canonical first) followed by
	its auxiliary; every later substitution contributes
	its fresh factor and then its auxiliary. A final
	pendant vertex of degree one hanging off the last
	auxiliary closes the path.

	Raises:
		InconsistentChainError: the substitutions do not
			form a chain or name vertices missing from
			the graph.
	"""
	vertices = set(graph.vertices)
	chains: list[TriangleChain] = []

	for chain_id, subs in group_by_chain(substitutions).items():
		first = subs[0]
		a, b = sorted(first.factors)
		path: list[VarId] = [a, b, first.aux]
		current = first.aux

		for sub in subs[1:]:
			if current not in sub.factors:
				raise InconsistentChainError(
					f'{sub.aux} does not extend {current}',
					chain_id=chain_id,
				)
			fresh = (
				sub.factor_b
				if sub.factor_a == current
				else sub.factor_a
			)
			if fresh in path:
				raise InconsistentChainError(
					f'{fresh} appears twice in the chain',
					chain_id=chain_id,
				)
			path.extend((fresh, sub.aux))
			current = sub.aux

		missing = [v for v in path if v not in vertices]
		if missing:
			raise InconsistentChainError(
				'Chain vertices missing from the graph: '
				+ ', '.join(v.name for v in missing),
				chain_id=chain_id,
			)

		pendants = [
			v
			for v in graph.neighbors(current)
			if v not in path and graph.degree(v) == 1
		]
		if pendants:
			path.append(pendants[0])

		chains.append(
			TriangleChain(
				chain_id=chain_id,
				path=tuple(path),
				triangles=tuple(s.vertices for s in subs),
			)
		)

	return chains


def classify_chains(
	chains: Sequence[TriangleChain],
	duplicates: Iterable[tuple[VarId, VarId]] = (),
) -> dict[tuple[int, int], ChainRelation]:
	"""
	Relation of every pair of chains, keyed by their
	ids in ascending order.

	Duplicates are mapped back to the variable they
	mirror first, so a split problem reports the
	structure it had before splitting. Pass no
	duplicates to check that chains are disjoint as
	they stand.
	"""
	origin = {d: o for o, d in duplicates}

	def resolve(vs: Iterable[VarId]) -> set[VarId]:
		return {origin.get(v, v) for v in vs}

	ordered = sorted(chains, key=lambda c: c.chain_id)
	relations: dict[tuple[int, int], ChainRelation] = {}

	for first, second in combinations(ordered, 2):
		shared = resolve(first.vertices) & resolve(
			second.vertices
		)
		if not shared:
			relation = ChainRelation.INDEPENDENT
		elif len(shared) == 1 and shared <= resolve(
			first.auxiliaries
		):
			relation = ChainRelation.BIFURCATION
		else:
			relation = ChainRelation.OVERLAP

		relations[(first.chain_id, second.chain_id)] = relation

	return relations


def classify_edges(
	graph: InteractionGraph,
	chains: Sequence[TriangleChain],
) -> EdgeClassification:
	"""
	Split the graph edges into edges inside a chain
	(triangle edges and pendant edges) and extraneous
	edges routed separately.
	"""
	inside: set[Pair] = set()
	for chain in chains:
		inside |= chain.edges()

	chain_edges = frozenset(e for e in graph.edges if e in inside)
	extraneous = frozenset(
		e for e in graph.edges if e not in inside
	)

	logger.debug(
		f'{len(chain_edges)} chain edges, '
		f'{len(extraneous)} extraneous edges',
		extra=stage('graph'),
	)
	return EdgeClassification(
		chain_edges=chain_edges,
		extraneous_edges=extraneous,
	)


def relation_labels(
	relations: dict[tuple[int, int], ChainRelation],
) -> dict[str, str]:
	return {
		f'{i}-{j}': relation.value
		for (i, j), relation in relations.items()
	}
