"""
This module contains the exhaustive check that a
quadratization preserves the minima of the original
cost function. Auxiliaries and duplicates are
enumerated as free binaries.
"""

import logging

import numpy as np

from qubochain.pubo.polynomial import Polynomial
from qubochain.pubo.variables import VarKind
from qubochain.quadratizer.problem import QuadratizedProblem
from qubochain.schemas.report import QuadratizationCheck
from qubochain.utils.logging import stage
from qubochain.verify.brute_force import (
	MAX_VARIABLES,
	TOLERANCE,
	MinimumTracker,
	check_size,
	chunks,
	energies,
	index_bits,
)

logger = logging.getLogger(__name__)


def check_quadratization(
	original: Polynomial,
	problem: QuadratizedProblem,
	*,
	limit: int = MAX_VARIABLES,
	tolerance: float = TOLERANCE,
) -> QuadratizationCheck:
	"""
	Compare `problem.qubo` with `original` over every
	assignment.

	Problem variables take the low bits of the index, so
	`index & mask` recovers x and the minimum of Q over
	the remaining variables is kept per x.

	Raises:
		OracleSizeError: more than `limit` variables in
			total.
	"""
	qubo = problem.qubo
	xs = tuple(
		sorted(
			set(original.variables)
			| {v for v in qubo.variables if v.kind is VarKind.PROBLEM}
		)
	)
	zs = tuple(sorted(set(qubo.variables) - set(xs)))
	variables = xs + zs
	check_size(len(variables), limit)

	n_x = len(xs)
	mask = (1 << n_x) - 1

	x_bits = index_bits(np.arange(1 << n_x, dtype=np.int64), n_x)
	cost = energies(original, xs, x_bits)
	min_original = float(cost.min())

	per_x = np.full(1 << n_x, np.inf)
	tracker = MinimumTracker(tolerance)
	for indices in chunks(len(variables)):
		bits = index_bits(indices, len(variables))
		values = energies(qubo, variables, bits)
		np.minimum.at(per_x, indices & mask, values)
		tracker.update(indices, values)

	argmins = tracker.argmins
	argmin_bits = index_bits(argmins, len(variables))
	column = {v: i for i, v in enumerate(variables)}

	satisfied = np.ones(len(argmins), dtype=bool)
	for sub in problem.substitutions:
		product = (
			argmin_bits[:, column[sub.factor_a]]
			& argmin_bits[:, column[sub.factor_b]]
		)
		satisfied &= argmin_bits[:, column[sub.aux]] == product
	for source, duplicate in problem.duplicates:
		satisfied &= (
			argmin_bits[:, column[source]]
			== argmin_bits[:, column[duplicate]]
		)

	min_qubo = float(tracker.value)
	check = QuadratizationCheck(
		minima_preserved=abs(min_qubo - min_original) <= tolerance,
		min_original=min_original,
		min_qubo=min_qubo,
		argmin_projection_ok=bool(
			np.all(cost[argmins & mask] <= min_original + tolerance)
		),
		extension_ok=bool(
			np.all(np.abs(per_x - cost) <= tolerance)
		),
		constraints_ok=bool(satisfied.all()),
	)

	logger.info(
		f'[VERIFY] {len(variables)} variables, min C '
		f'{min_original:g}, min Q {min_qubo:g}, '
		f'{len(argmins)} argmin(s), '
		f'{"ok" if check.passed else "FAILED"}',
		extra=stage('verify'),
	)
	return check
