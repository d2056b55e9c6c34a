"""
This module contains the JSON schema of a quadratized
problem: the QUBO, the original polynomial and the
bookkeeping needed to undo every substitution.
"""

from pydantic import BaseModel, ConfigDict, Field

from qubochain.schemas.polynomial import PolynomialDocument


class SubstitutionDocument(BaseModel):
	"""One auxiliary variable `aux = factor_a * factor_b`."""

	model_config = ConfigDict(extra='forbid')

	aux: str = Field(
		...,
		description='Name of the auxiliary variable.',
	)
	factor_a: str = Field(..., description='First factor.')
	factor_b: str = Field(..., description='Second factor.')
	penalty_factor: float = Field(
		...,
		gt=0,
		description='Multiplier of the penalty term.',
	)
	chain_id: int = Field(
		...,
		ge=0,
		description=(
			'Chain the substitution belongs to. Baseline '
			'substitutions each get their own id.'
		),
	)


class DuplicateDocument(BaseModel):
	"""A duplicate variable and the variable it mirrors."""

	model_config = ConfigDict(extra='forbid')

	original: str
	duplicate: str


class QuadratizedProblemDocument(BaseModel):
	"""Schema for a serialized quadratized problem."""

	model_config = ConfigDict(extra='forbid')

	strategy: str = Field(
		...,
		description='Quadratizer that produced the problem.',
	)
	penalty_factor: float = Field(..., gt=0)
	original: PolynomialDocument
	objective: PolynomialDocument = Field(
		...,
		description=(
			'The reduced cost function without penalty '
			'terms.'
		),
	)
	qubo: PolynomialDocument
	substitutions: list[SubstitutionDocument] = Field(
		default_factory=list,
	)
	duplicates: list[DuplicateDocument] = Field(
		default_factory=list,
	)
	extraneous_equalities: list[tuple[str, str]] = Field(
		default_factory=list,
		description=(
			'Equality edges between a variable and its '
			'duplicate.'
		),
	)
