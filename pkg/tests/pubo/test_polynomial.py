"""
This module is used to test the polynomial type and
the operations the quadratizers are built from.
"""

from itertools import product as assignments

import pytest

from qubochain.exceptions.pubo import (
	InvalidPenaltyError,
	MissingAssignmentError,
	NonBinaryAssignmentError,
	SubstitutionConflictError,
)
from qubochain.pubo.parser import parse_polynomial
from qubochain.pubo.polynomial import (
	Polynomial,
	evaluate,
	pair_frequencies,
	penalty_term,
	substitute_pair,
)
from qubochain.pubo.variables import VarId, VarKind, x, y
from tests.utils.builders import product

# --- Test Constants ---

EXAMPLE_ONE_QUBO = parse_polynomial(
	'y1 y2 + 2 x1 x2 - 4 x1 y1 - 4 x2 y1 + 6 y1'
	' + 2 x3 x4 - 4 x3 y2 - 4 x4 y2 + 6 y2'
)

# --- Test cases ---


def test_monomials_are_multilinear():
	poly = Polynomial.product([x(2), x(1), x(2)])

	assert poly.terms == {(x(1), x(2)): 1.0}
	assert poly.degree == 2


def test_zero_coefficients_are_dropped():
	poly = Polynomial.product([x(1), x(2)], 3.0) - (
		Polynomial.product([x(2), x(1)], 3.0)
	)

	assert len(poly) == 0
	assert not poly
	assert poly.degree == 0


def test_small_coefficients_survive():
	tiny = parse_polynomial('1e-13 x1')

	assert tiny.terms == {(x(1),): 1e-13}
	assert tiny - tiny == Polynomial()

	# Rounding left over from a cancellation is dropped
	residue = Polynomial({(x(1),): 0.1 + 0.2}) - Polynomial(
		{(x(1),): 0.3}
	)
	assert not residue


def test_canonical_variable_order():
	dup = VarId.duplicate(x(3), 1)
	ordered = sorted([dup, y(1), x(7), x(2)])

	assert ordered == [x(2), x(7), y(1), dup]
	assert dup.name == 'x3p1'
	assert dup.kind is VarKind.DUPLICATE
	assert dup.root == x(3)


def test_duplicate_needs_origin():
	with pytest.raises(ValueError):
		VarId(VarKind.DUPLICATE, 1)

	with pytest.raises(ValueError):
		VarId(VarKind.PROBLEM, 1, origin=x(2))


def test_evaluate_product():
	poly = product(4)
	ones = {x(i): 1 for i in range(1, 5)}

	assert evaluate(poly, ones) == 1
	assert evaluate(poly, {**ones, x(3): 0}) == 0


def test_evaluate_example_one_at_all_ones():
	assignment = {v: 1 for v in EXAMPLE_ONE_QUBO.variables}

	assert EXAMPLE_ONE_QUBO.evaluate(assignment) == 1


def test_evaluate_missing_variable():
	with pytest.raises(MissingAssignmentError) as info:
		evaluate(product(3), {x(1): 1, x(2): 1})

	assert info.value.context['variables'] == ['x3']


def test_evaluate_rejects_non_binary_values():
	test_cases = [
		{x(1): 2, x(2): 3},
		{x(1): 1, x(2): -1},
		{x(1): 0.5, x(2): 1},
	]

	for assignment in test_cases:
		with pytest.raises(NonBinaryAssignmentError):
			evaluate(product(2), assignment)

	# Booleans are 0/1 values
	booleans = {x(1): True, x(2): True}
	assert evaluate(product(2), booleans) == 1


def test_penalty_term_coefficients():
	a, b, aux = x(1), x(2), y(1)
	penalty = penalty_term(a, b, aux, 2.5)

	assert penalty.terms == {
		(a, b): 2.5,
		(a, aux): -5.0,
		(b, aux): -5.0,
		(aux,): 7.5,
	}


def test_penalty_gap():
	a, b, aux = x(1), x(2), y(1)
	c = 1.0
	penalty = penalty_term(a, b, aux, c)

	for va, vb, vy in assignments([0, 1], repeat=3):
		value = penalty.evaluate({a: va, b: vb, aux: vy})
		if vy == va * vb:
			assert value == 0
		else:
			assert value >= c

	assert penalty.evaluate({a: 1, b: 1, aux: 0}) == c
	assert penalty.evaluate({a: 0, b: 0, aux: 1}) == 3 * c


def test_penalty_term_rejects_bad_input():
	with pytest.raises(InvalidPenaltyError):
		penalty_term(x(1), x(2), y(1), 0.0)

	with pytest.raises(SubstitutionConflictError):
		penalty_term(x(1), x(1), y(1), 1.0)

	with pytest.raises(SubstitutionConflictError):
		penalty_term(x(1), y(1), y(1), 1.0)


def test_substitute_pair():
	test_cases = [
		# Pair inside the term
		('x1 x2 x3 x4', (x(3), x(4)), 'x1 x2 y1'),
		# Pair absent
		('x1 x2', (x(3), x(4)), 'x1 x2'),
	]

	for text, (a, b), expected in test_cases:
		result = substitute_pair(parse_polynomial(text), a, b, y(1))
		assert result == parse_polynomial(expected)


def test_substitute_pair_on_auxiliary():
	poly = parse_polynomial('x1 x2 x5 y1 + x1 x2 y1 + x2 y1')

	result = substitute_pair(poly, x(2), y(1), y(2))

	assert result == parse_polynomial('x1 x5 y2 + x1 y2 + y2')


def test_substitute_pair_rejects_present_target():
	with pytest.raises(SubstitutionConflictError):
		substitute_pair(parse_polynomial('x1 x2 y1'), x(1), x(2), y(1))


def test_substitution_preserves_value_when_constraint_holds():
	poly = parse_polynomial('2 x1 x2 x3 - x2 x3 + x1 x3 x4')
	substituted = substitute_pair(poly, x(2), x(3), y(1))

	for bits in assignments([0, 1], repeat=4):
		assignment = {x(i + 1): bit for i, bit in enumerate(bits)}
		assignment[y(1)] = bits[1] * bits[2]
		assert substituted.evaluate(assignment) == poly.evaluate(
			assignment
		)


def test_pair_frequencies():
	poly = parse_polynomial('x1 x2 x3 x4 x5 + x1 x2 x3 x4 + x2 x3 x4')
	counts = pair_frequencies(poly, 3)

	for p in [(x(2), x(3)), (x(2), x(4)), (x(3), x(4))]:
		assert counts[p] == 3
	assert counts[(x(1), x(2))] == 2
	assert counts[(x(1), x(5))] == 1


def test_pair_frequencies_edge_cases():
	assert pair_frequencies(parse_polynomial('x1 x2 + x2 x3')) == {}

	cubic = pair_frequencies(parse_polynomial('x1 x2 x3'))
	assert dict(cubic) == {
		(x(1), x(2)): 1,
		(x(1), x(3)): 1,
		(x(2), x(3)): 1,
	}

	with pytest.raises(ValueError):
		pair_frequencies(product(3), 2)


def test_weighted_pair_frequencies():
	poly = parse_polynomial('-4 x1 x2 x3 + x2 x3 x4')
	counts = pair_frequencies(poly, weighted=True)

	assert counts[(x(1), x(2))] == 4
	assert counts[(x(2), x(3))] == 5
	assert counts[(x(3), x(4))] == 1
