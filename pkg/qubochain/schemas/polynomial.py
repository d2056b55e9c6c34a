"""
This module contains the JSON schema of a polynomial,
`{"terms":[{"coef":r,"vars":["x1","x2"]}]}`.
"""

from pydantic import BaseModel, ConfigDict, Field


class PolynomialTermDocument(BaseModel):
	"""One weighted monomial."""

	model_config = ConfigDict(extra='forbid')

	coef: float = Field(
		...,
		description='Real coefficient of the term.',
	)
	vars: list[str] = Field(
		default_factory=list,
		description=(
			'Variable names of the monomial; empty for '
			'the constant term.'
		),
	)


class PolynomialDocument(BaseModel):
	"""Schema for a serialized polynomial."""

	model_config = ConfigDict(extra='forbid')

	terms: list[PolynomialTermDocument] = Field(
		default_factory=list,
		description='Terms in canonical order.',
	)
