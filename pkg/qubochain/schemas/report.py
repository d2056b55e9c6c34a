"""
This module contains the schemas of the verification
reports printed by the `verify` command.
"""

from pydantic import BaseModel, ConfigDict, Field


class QuadratizationCheck(BaseModel):
	"""Outcome of the exhaustive quadratization check."""

	model_config = ConfigDict(extra='forbid')

	minima_preserved: bool = Field(
		...,
		description='min Q equals min C.',
	)
	min_original: float
	min_qubo: float
	argmin_projection_ok: bool = Field(
		...,
		description='Every argmin of Q projects to an argmin of C.',
	)
	extension_ok: bool = Field(
		...,
		description=(
			'For every x, the minimum of Q over the added '
			'variables equals C(x).'
		),
	)
	constraints_ok: bool = Field(
		...,
		description=(
			'Every argmin of Q satisfies y = a*b and x = x\'.'
		),
	)

	@property
	def passed(self) -> bool:
		return (
			self.minima_preserved
			and self.argmin_projection_ok
			and self.extension_ok
			and self.constraints_ok
		)


class VerificationReport(QuadratizationCheck):
	"""
	Quadratization check plus the optional circuit
	checks. Circuit fields stay null when no circuit
	was given.
	"""

	phase_ok: bool | None = None
	max_phase_error: float | None = None
	permutation_ok: bool | None = None
	connectivity_ok: bool | None = None
	violations: list[str] = Field(default_factory=list)

	@property
	def passed(self) -> bool:
		circuit_checks = (
			self.phase_ok,
			self.permutation_ok,
			self.connectivity_ok,
		)
		return super().passed and all(
			c is not False for c in circuit_checks
		)
