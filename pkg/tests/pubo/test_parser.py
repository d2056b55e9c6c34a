"""
This module is used to test the text and JSON formats
of polynomials.
"""

import pytest

from qubochain.exceptions.pubo import (
	PolynomialParseError,
	UnknownVariableError,
)
from qubochain.pubo.parser import (
	dump_polynomial_json,
	load_polynomial_json,
	parse_polynomial,
	serialize_polynomial,
)
from qubochain.pubo.polynomial import Polynomial
from qubochain.pubo.variables import VarId, x, y

# --- Test cases ---


def test_parse_examples():
	assert parse_polynomial('x1 x2 x3 x4').terms == {
		(x(1), x(2), x(3), x(4)): 1.0
	}
	assert parse_polynomial('x1 x1').terms == {(x(1),): 1.0}
	assert parse_polynomial('3 x1 x2 - 3 x1 x2 + 5') == (
		Polynomial.constant(5)
	)


def test_parse_coefficients_and_signs():
	poly = parse_polynomial('-2.5 * x1 x2 + 1e1 y1 - x3 + .5')

	assert poly.terms == {
		(x(1), x(2)): -2.5,
		(y(1),): 10.0,
		(x(3),): -1.0,
		(): 0.5,
	}


def test_parse_duplicates():
	poly = parse_polynomial('x3 x3p + 2 y2p4')
	first = VarId.duplicate(x(3), 1)
	second = VarId.duplicate(y(2), 4)

	assert poly.terms == {(x(3), first): 1.0, (second,): 2.0}


def test_bare_duplicate_skips_explicit_index():
	poly = parse_polynomial('x3p1 + x5p')

	assert set(poly.variables) == {
		VarId.duplicate(x(3), 1),
		VarId.duplicate(x(5), 2),
	}


def test_conflicting_duplicate_index():
	with pytest.raises(PolynomialParseError):
		parse_polynomial('x3p1 + x4p1')


def test_parse_errors():
	with pytest.raises(UnknownVariableError) as info:
		parse_polynomial('x1 z2')
	assert info.value.context['position'] == 3

	with pytest.raises(PolynomialParseError) as info:
		parse_polynomial('x1 + + x2')
	assert info.value.context['position'] == 5

	with pytest.raises(PolynomialParseError):
		parse_polynomial('x1 $ x2')

	with pytest.raises(PolynomialParseError):
		parse_polynomial('   ')


def test_serialize_canonical_form():
	test_cases = [
		('x2 x1 + 3', 'x1 x2 + 3'),
		('-x1 + 2 x1 x2 x3', '2 x1 x2 x3 - x1'),
		('0.5 y1 - 1.5 x1 y1', '-1.5 x1 y1 + 0.5 y1'),
		('x1 - x1', '0'),
	]

	for text, expected in test_cases:
		assert serialize_polynomial(parse_polynomial(text)) == (
			expected
		)


def test_parse_inverts_serialize():
	texts = [
		'x1 x2 x3 x4 - 2 x1 y3 + 0.25',
		'x3 x3p + 2 y2p4 - 7 y1',
		'-x5',
	]

	for text in texts:
		poly = parse_polynomial(text)
		assert parse_polynomial(serialize_polynomial(poly)) == poly


def test_json_form():
	poly = parse_polynomial('2 x1 x2 - y1 + 3')
	text = dump_polynomial_json(poly, indent=None)

	assert text == (
		'{"terms":[{"coef":2.0,"vars":["x1","x2"]},'
		'{"coef":-1.0,"vars":["y1"]},'
		'{"coef":3.0,"vars":[]}]}'
	)
	assert load_polynomial_json(text) == poly


def test_malformed_json():
	with pytest.raises(PolynomialParseError):
		load_polynomial_json('{"terms": [{"coef": "a"}]}')
