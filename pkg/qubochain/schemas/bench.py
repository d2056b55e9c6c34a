"""
This module contains the schemas of benchmark records
and of the summary written by `bench --summary-json`.
"""

from pydantic import BaseModel, ConfigDict, Field

CSV_COLUMNS = [
	'seed',
	'N',
	'strategy',
	'aux_count',
	'depth',
	'width',
	'two_qubit_count',
	'swap_count',
	'compile_time_ms',
]


class BenchRecord(BaseModel):
	"""One compiled (instance, strategy) pair."""

	model_config = ConfigDict(extra='forbid')

	seed: int = Field(..., description='Instance seed.')
	N: int = Field(..., ge=1, description='Problem variables.')
	strategy: str
	aux_count: int = Field(..., ge=0)
	depth: int = Field(..., ge=0)
	width: int = Field(..., ge=0)
	two_qubit_count: int = Field(..., ge=0)
	swap_count: int = Field(..., ge=0)
	compile_time_ms: float = Field(..., ge=0)
	cost_layer_depth: int = Field(
		...,
		ge=0,
		description='Depth of the first cost layer alone.',
	)
	connectivity_violations: int = Field(0, ge=0)
	quadratization_ok: bool | None = Field(
		default=None,
		description='Oracle outcome, null when too large.',
	)


class InstanceFailure(BaseModel):
	"""An (instance, strategy) pair that did not compile."""

	model_config = ConfigDict(extra='forbid')

	seed: int
	N: int
	strategy: str
	error: str = Field(..., description='Exception class.')
	message: str


class GroupSummary(BaseModel):
	"""Means over the records of one (N, strategy)."""

	model_config = ConfigDict(extra='forbid')

	N: int
	strategy: str
	samples: int
	mean_depth: float
	mean_width: float
	mean_two_qubit_count: float
	mean_swap_count: float
	mean_aux_count: float


class BenchSummary(BaseModel):
	"""Aggregate statistics of a benchmark run."""

	model_config = ConfigDict(extra='forbid')

	settings: dict[str, str] = Field(default_factory=dict)
	groups: list[GroupSummary] = Field(default_factory=list)
	depth_reduction: dict[int, float] = Field(
		default_factory=dict,
		description=(
			'Mean relative depth reduction of chain over '
			'baseline per N.'
		),
	)
	mean_depth_reduction: float | None = None
	control_cost_depth: dict[int, int] = Field(
		default_factory=dict,
		description=(
			'Chain cost-layer depth of the pure product '
			'of N variables.'
		),
	)
	connectivity_violations: int = 0
	quadratization_failures: int = 0
	failures: list[InstanceFailure] = Field(
		default_factory=list
	)
