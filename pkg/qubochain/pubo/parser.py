"""
This module contains the text and JSON interchange
formats of polynomials.

Text grammar::

	poly := term (("+" | "-") term)*
	term := [number "*"?] var+ | number
	var  := "x" int | "y" int | ("x" | "y") int "p" [int]

Variables inside a term are separated by whitespace
(or `*`). A trailing `p` marks a duplicate of the
variable it follows; `x3p2` names duplicate #2 of x3
while a bare `x3p` takes the lowest duplicate index not
used elsewhere in the same text.
"""

import re
from collections.abc import Iterable

from pydantic import ValidationError

from qubochain.exceptions.pubo import (
	PolynomialParseError,
	UnknownVariableError,
)
from qubochain.pubo.polynomial import Polynomial
from qubochain.pubo.variables import VarId
from qubochain.schemas.polynomial import (
	PolynomialDocument,
	PolynomialTermDocument,
)

TOKEN_PATTERN = re.compile(
	r'(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)'
	r'|(?P<var>[xy]\d+(?:p\d*)?)'
	r'|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)'
	r'|(?P<op>[+\-*])'
	r'|(?P<ws>\s+)'
	r'|(?P<bad>.)'
)

VARIABLE_PATTERN = re.compile(
	r'^(?P<prefix>[xy])(?P<index>\d+)'
	r'(?:(?P<dup>p)(?P<dup_index>\d*))?$'
)

Token = tuple[str, str, int]


def tokenize(text: str) -> list[Token]:
	tokens: list[Token] = []
	for match in TOKEN_PATTERN.finditer(text):
		kind = match.lastgroup
		value = match.group()
		pos = match.start()

		if kind == 'ws':
			continue
		if kind == 'ident':
			raise UnknownVariableError(
				f'Unknown variable {value!r}',
				token=value,
				position=pos,
			)
		if kind == 'bad':
			raise PolynomialParseError(
				f'Unexpected character {value!r}',
				position=pos,
				text=text,
			)
		tokens.append((kind, value, pos))

	return tokens


def resolve_variables(
	names: Iterable[str],
) -> dict[str, VarId]:
	"""
	Map variable names to identifiers, giving bare
	duplicate markers (`x3p`) the lowest free index.
	"""
	names = list(dict.fromkeys(names))
	parsed: dict[str, re.Match[str]] = {}

	for name in names:
		match = VARIABLE_PATTERN.match(name)
		if match is None:
			raise UnknownVariableError(
				f'Unknown variable {name!r}',
				token=name,
			)
		parsed[name] = match

	resolved: dict[str, VarId] = {}
	taken: dict[int, VarId] = {}
	bare: list[tuple[str, VarId]] = []

	for name, match in parsed.items():
		index = int(match['index'])
		base = (
			VarId.problem(index)
			if match['prefix'] == 'x'
			else VarId.auxiliary(index)
		)

		if match['dup'] is None:
			resolved[name] = base
			continue

		if match['dup_index'] == '':
			bare.append((name, base))
			continue

		dup_index = int(match['dup_index'])
		if taken.get(dup_index, base) != base:
			raise PolynomialParseError(
				f'Duplicate index {dup_index} is used for '
				f'both {taken[dup_index].name} and '
				f'{base.name}',
				text=name,
			)
		taken[dup_index] = base
		resolved[name] = VarId.duplicate(base, dup_index)

	candidate = 1
	for name, base in bare:
		while candidate in taken:
			candidate += 1
		taken[candidate] = base
		resolved[name] = VarId.duplicate(base, candidate)

	return resolved


def parse_polynomial(text: str) -> Polynomial:
	"""
	Parse polynomial text into its multilinear
	canonical form. Repeated variables collapse and
	like terms merge.

	Raises:
		PolynomialParseError: syntax error, with the
			character position.
		UnknownVariableError: a token that is not a
			variable name.
	"""
	tokens = tokenize(text)
	if not tokens:
		raise PolynomialParseError(
			'Empty polynomial text',
			position=0,
			text=text,
		)

	raw_terms: list[tuple[float, list[str]]] = []
	i = 0
	sign = 1.0

	if tokens[0][1] in '+-' and tokens[0][0] == 'op':
		sign = -1.0 if tokens[0][1] == '-' else 1.0
		i = 1

	while True:
		coef, names, i = _parse_term(tokens, i, text)
		raw_terms.append((sign * coef, names))

		if i == len(tokens):
			break

		kind, value, pos = tokens[i]
		if kind != 'op' or value == '*':
			raise PolynomialParseError(
				f'Expected "+" or "-" but found {value!r}',
				position=pos,
				text=text,
			)
		sign = -1.0 if value == '-' else 1.0
		i += 1

	lookup = resolve_variables(
		name for _, names in raw_terms for name in names
	)
	return Polynomial(
		([lookup[name] for name in names], coef)
		for coef, names in raw_terms
	)


def _parse_term(
	tokens: list[Token],
	i: int,
	text: str,
) -> tuple[float, list[str], int]:
	coef = 1.0
	names: list[str] = []
	start = tokens[i][2] if i < len(tokens) else len(text)

	if i < len(tokens) and tokens[i][0] == 'num':
		coef = float(tokens[i][1])
		i += 1
		if i < len(tokens) and tokens[i][1] == '*':
			i += 1
			if i == len(tokens) or tokens[i][0] != 'var':
				raise PolynomialParseError(
					'Expected a variable after "*"',
					position=_position(tokens, i, text),
					text=text,
				)
		has_number = True
	else:
		has_number = False

	while i < len(tokens) and tokens[i][0] == 'var':
		names.append(tokens[i][1])
		i += 1
		if (
			i + 1 < len(tokens)
			and tokens[i][1] == '*'
			and tokens[i + 1][0] == 'var'
		):
			i += 1

	if not has_number and not names:
		raise PolynomialParseError(
			'Expected a term',
			position=start,
			text=text,
		)

	return coef, names, i


def _position(
	tokens: list[Token],
	i: int,
	text: str,
) -> int:
	return tokens[i][2] if i < len(tokens) else len(text)


def format_coefficient(value: float) -> str:
	if value.is_integer() and abs(value) < 1e16:
		return str(int(value))
	return repr(value)


def serialize_polynomial(poly: Polynomial) -> str:
	"""
	Canonical text form; `parse_polynomial` inverts it.
	The zero polynomial is written `0`.
	"""
	if not poly:
		return '0'

	parts: list[str] = []
	for key, coef in poly.items():
		names = ' '.join(v.name for v in key)
		magnitude = abs(coef)

		if not key:
			body = format_coefficient(magnitude)
		elif magnitude == 1.0:
			body = names
		else:
			body = f'{format_coefficient(magnitude)} {names}'

		if not parts:
			parts.append(f'-{body}' if coef < 0 else body)
		else:
			parts.append(
				f'- {body}' if coef < 0 else f'+ {body}'
			)

	return ' '.join(parts)


def polynomial_to_document(
	poly: Polynomial,
) -> PolynomialDocument:
	return PolynomialDocument(
		terms=[
			PolynomialTermDocument(
				coef=coef,
				vars=[v.name for v in key],
			)
			for key, coef in poly.items()
		]
	)


def polynomial_from_document(
	document: PolynomialDocument,
) -> Polynomial:
	lookup = resolve_variables(
		name for term in document.terms for name in term.vars
	)
	return Polynomial(
		([lookup[name] for name in term.vars], term.coef)
		for term in document.terms
	)


def load_polynomial_json(text: str | bytes) -> Polynomial:
	"""
	Parse the JSON polynomial form.

	Raises:
		PolynomialParseError: the document does not
			match the schema.
	"""
	try:
		document = PolynomialDocument.model_validate_json(text)
	except ValidationError as e:
		raise PolynomialParseError(
			'Malformed polynomial JSON',
			text=str(e),
		) from e
	return polynomial_from_document(document)


def dump_polynomial_json(
	poly: Polynomial,
	*,
	indent: int | None = 2,
) -> str:
	return polynomial_to_document(poly).model_dump_json(
		indent=indent
	)
