"""
This module contains the splitting of chains that
share vertices. Every shared vertex is kept by the
chain with the lowest id; each later chain using it
gets a fresh duplicate x' bound to the original by the
penalty c_P (x - x')^2.
"""

import logging
from collections.abc import Sequence
from dataclasses import replace

from qubochain.graph.chains import (
	ChainRelation,
	TriangleChain,
	classify_chains,
	extract_chains,
	relation_labels,
)
from qubochain.graph.interaction import build_interaction_graph
from qubochain.pubo.variables import VarId, VarKind, next_index
from qubochain.quadratizer.problem import (
	QuadratizedProblem,
	Substitution,
	assemble_qubo,
)
from qubochain.utils.logging import stage

logger = logging.getLogger(__name__)


def split_shared_variables(
	problem: QuadratizedProblem,
	chains: Sequence[TriangleChain],
) -> QuadratizedProblem:
	"""
	Make every chain vertex-disjoint from the others.

	Args:
		problem: Quadratized problem whose substitutions
			produced `chains`.
		chains: Chains extracted from `problem`.

	Returns:
		The rewired problem, or `problem` itself when the
		chains are already independent.
	"""
	every = (
		*problem.qubo.variables,
		*problem.original.variables,
	)
	dup_index = next_index(every, VarKind.DUPLICATE)

	owner: dict[VarId, int] = {}
	rewiring: dict[int, dict[VarId, VarId]] = {}
	duplicates = list(problem.duplicates)
	equalities = list(problem.extraneous_equalities)

	for chain in sorted(chains, key=lambda c: c.chain_id):
		mapping: dict[VarId, VarId] = {}
		for v in sorted(chain.triangle_vertices):
			if v not in owner:
				continue
			dup = VarId.duplicate(v.root, dup_index)
			dup_index += 1
			mapping[v] = dup
			duplicates.append((v, dup))
			equalities.append((v, dup))
			logger.debug(
				f'[SPLIT] {v} shared with chain {owner[v]}, '
				f'chain {chain.chain_id} uses {dup}',
				extra=stage('split'),
			)

		for v in chain.triangle_vertices:
			owner.setdefault(mapping.get(v, v), chain.chain_id)
		if mapping:
			rewiring[chain.chain_id] = mapping

	if not rewiring:
		return problem

	substitutions: list[Substitution] = [
		sub.rewired(rewiring[sub.chain_id])
		if sub.chain_id in rewiring
		else sub
		for sub in problem.substitutions
	]

	logger.info(
		f'[SPLIT] Added {len(duplicates) - len(problem.duplicates)} '
		f'duplicate(s) across {len(rewiring)} chain(s)',
		extra=stage('split'),
	)

	return replace(
		problem,
		qubo=assemble_qubo(
			problem.objective,
			substitutions,
			duplicates,
			problem.penalty_factor,
		),
		substitutions=tuple(substitutions),
		duplicates=tuple(duplicates),
		extraneous_equalities=tuple(equalities),
	)


def resolve_chains(
	problem: QuadratizedProblem,
) -> tuple[QuadratizedProblem, list[TriangleChain]]:
	"""
	Extract the chains of a chain quadratization and
	split them when they share vertices.

	Returns:
		The (possibly rewired) problem and its
		independent chains.
	"""
	graph = build_interaction_graph(problem.qubo)
	chains = extract_chains(graph, problem.substitutions)
	relations = classify_chains(chains)

	if all(
		r is ChainRelation.INDEPENDENT
		for r in relations.values()
	):
		return problem, chains

	logger.info(
		f'[SPLIT] Chain relations: {relation_labels(relations)}',
		extra=stage('split'),
	)
	split = split_shared_variables(problem, chains)
	graph = build_interaction_graph(split.qubo)
	return split, extract_chains(graph, split.substitutions)
