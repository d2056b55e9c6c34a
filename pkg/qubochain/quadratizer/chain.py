"""
This module contains the hardware-aware quadratizer.

Each new auxiliary variable is the product of the
previous auxiliary and one problem variable, so the
interaction graph of the result is a chain of triangles
that maps onto a line of qubits. When the current chain
cannot grow but terms of degree three or more remain, a
new chain is started over all variables, auxiliaries
included.
"""

import logging
from collections import Counter

from qubochain.pubo.polynomial import (
	Polynomial,
	pair_frequencies,
	substitute_pair,
)
from qubochain.pubo.variables import VarId, VarKind, next_index
from qubochain.quadratizer.problem import (
	QuadratizedProblem,
	Substitution,
	assemble_qubo,
	resolve_penalty_factor,
)
from qubochain.quadratizer.selection import (
	SelectionPolicy,
	Selector,
)
from qubochain.utils.logging import stage

logger = logging.getLogger(__name__)

STRATEGY = 'chain'


def continuation_frequencies(
	poly: Polynomial,
	anchor: VarId,
	excluded: set[VarId],
	*,
	weighted: bool = False,
) -> Counter[VarId]:
	"""
	How often each problem variable shares a term of
	degree >= 3 with `anchor`, skipping `excluded`.
	"""
	counts: Counter[VarId] = Counter()
	for key, coef in poly.terms.items():
		if len(key) < 3 or anchor not in key:
			continue
		weight = abs(coef) if weighted else 1
		for v in key:
			if (
				v != anchor
				and v.kind is VarKind.PROBLEM
				and v not in excluded
			):
				counts[v] += weight
	return counts


def quadratize_chain(
	poly: Polynomial,
	*,
	policy: SelectionPolicy | None = None,
	penalty_factor: float | None = None,
) -> QuadratizedProblem:
	"""
	Chain-building quadratization.

	Args:
		poly: Cost function of any degree.
		policy: Tie-breaking and frequency counting.
			Canonical ties keep the highest candidate.
		penalty_factor: Explicit c_P, chosen with
			`select_penalty_factor` when omitted.

	Returns:
		The quadratized problem; `chain_id` increases
		with every restart.
	"""
	policy = policy or SelectionPolicy()
	selector = Selector(
		policy,
		prefer_highest=True,
		name=STRATEGY.upper(),
	)
	c_p = resolve_penalty_factor(poly, penalty_factor)

	objective = poly
	substitutions: list[Substitution] = []
	aux_index = next_index(poly.variables, VarKind.AUXILIARY)
	chain_id = 0

	def substitute(a: VarId, b: VarId) -> VarId:
		nonlocal objective, aux_index
		aux = VarId.auxiliary(aux_index)
		aux_index += 1
		objective = substitute_pair(objective, a, b, aux)
		substitutions.append(
			Substitution(
				aux=aux,
				factor_a=a,
				factor_b=b,
				penalty_factor=c_p,
				chain_id=chain_id,
			)
		)
		logger.debug(
			f'[CHAIN {chain_id}] {aux} = {a} * {b}',
			extra=stage('quadratize'),
		)
		return aux

	while objective.degree > 2:
		if chain_id > 0:
			logger.info(
				f'[CHAIN] Restarting with chain {chain_id}, '
				f'degree {objective.degree} remains',
				extra=stage('quadratize'),
			)

		start = selector.choose(
			pair_frequencies(
				objective,
				3,
				weighted=policy.weighted,
			)
		)
		current = substitute(*start)
		consumed = set(start)

		while objective.degree > 2:
			counts = continuation_frequencies(
				objective,
				current,
				consumed,
				weighted=policy.weighted,
			)
			if not counts:
				break

			chosen = selector.choose(counts)
			current = substitute(current, chosen)
			consumed.add(chosen)

		chain_id += 1

	logger.info(
		f'[CHAIN] {len(substitutions)} auxiliaries in '
		f'{chain_id} chain(s), c_P = {c_p:g}',
		extra=stage('quadratize'),
	)

	return QuadratizedProblem(
		qubo=assemble_qubo(objective, substitutions, (), c_p),
		substitutions=tuple(substitutions),
		original=poly,
		objective=objective,
		penalty_factor=c_p,
		strategy=STRATEGY,
	)
