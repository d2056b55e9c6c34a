"""
This module contains the conventional quadratizer: it
keeps substituting the pair that occurs most often
among the terms of degree three or more, which keeps
the number of auxiliary variables low.
"""

import logging

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

STRATEGY = 'baseline'


def quadratize_baseline(
	poly: Polynomial,
	*,
	policy: SelectionPolicy | None = None,
	penalty_factor: float | None = None,
) -> QuadratizedProblem:
	"""
	Pair-frequency quadratization.

	Args:
		poly: Cost function of any degree.
		policy: Tie-breaking and frequency counting.
			Canonical ties keep the lowest pair.
		penalty_factor: Explicit c_P, chosen with
			`select_penalty_factor` when omitted.

	Returns:
		The quadratized problem. Every substitution
		has its own chain id.
	"""
	policy = policy or SelectionPolicy()
	selector = Selector(
		policy,
		prefer_highest=False,
		name=STRATEGY.upper(),
	)
	c_p = resolve_penalty_factor(poly, penalty_factor)

	objective = poly
	substitutions: list[Substitution] = []
	aux_index = next_index(poly.variables, VarKind.AUXILIARY)

	while objective.degree > 2:
		counts = pair_frequencies(
			objective,
			3,
			weighted=policy.weighted,
		)
		a, b = selector.choose(counts)
		aux = VarId.auxiliary(aux_index)
		aux_index += 1

		objective = substitute_pair(objective, a, b, aux)
		substitutions.append(
			Substitution(
				aux=aux,
				factor_a=a,
				factor_b=b,
				penalty_factor=c_p,
				chain_id=len(substitutions),
			)
		)
		logger.debug(
			f'[BASELINE] {aux} = {a} * {b} '
			f'(frequency {counts[(a, b)]:g})',
			extra=stage('quadratize'),
		)

	logger.info(
		f'[BASELINE] {len(substitutions)} auxiliaries, '
		f'c_P = {c_p:g}',
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
