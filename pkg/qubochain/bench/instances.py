"""
This module contains the random instance generator:
sums of products of random variable subsets with
random coefficients.
"""

import numpy as np
from pydantic import (
	BaseModel,
	ConfigDict,
	Field,
	ValidationError,
	model_validator,
)

from qubochain.exceptions.bench import InvalidInstanceConfigError
from qubochain.pubo.polynomial import Polynomial
from qubochain.pubo.variables import x

# Coefficients below this magnitude are redrawn
MIN_ABS_COEF = 0.5
DEFAULT_MAX_DEGREE = 6


class InstanceConfig(BaseModel):
	"""Parameters of one random instance."""

	model_config = ConfigDict(extra='forbid', frozen=True)

	num_vars: int = Field(..., ge=2, description='N.')
	num_terms: int | None = Field(
		default=None,
		ge=1,
		description='Number of terms, N when omitted.',
	)
	max_term_degree: int | None = Field(
		default=None,
		ge=2,
		description='Largest term degree, min(N, 6) when omitted.',
	)
	coef_range: tuple[float, float] = (-10.0, 10.0)
	seed: int = Field(..., ge=0, lt=2**64)

	@model_validator(mode='after')
	def _check_range(self) -> 'InstanceConfig':
		lo, hi = self.coef_range
		if lo > hi:
			raise ValueError(f'Empty coefficient range {lo}..{hi}')
		return self

	@property
	def terms(self) -> int:
		return self.num_terms or self.num_vars

	@property
	def max_degree(self) -> int:
		degree = self.max_term_degree or DEFAULT_MAX_DEGREE
		return min(degree, self.num_vars)

	@classmethod
	def build(cls, **values: object) -> 'InstanceConfig':
		"""
		Raises:
			InvalidInstanceConfigError: the values do not
				validate.
		"""
		try:
			return cls(**values)
		except ValidationError as e:
			raise InvalidInstanceConfigError(
				'Invalid instance configuration',
				config=str(e.errors()[0]['msg']),
			) from e


def _coefficients_possible(lo: float, hi: float) -> bool:
	if lo == hi:
		return abs(lo) >= MIN_ABS_COEF
	return hi > MIN_ABS_COEF or lo < -MIN_ABS_COEF


def generate_instance(cfg: InstanceConfig) -> Polynomial:
	"""
	Random cost function over x1..xN.

	Each term takes a uniformly random subset whose size
	is uniform in [2, max degree]; its coefficient is
	uniform in `coef_range`, redrawn while its magnitude
	is below 0.5. Terms on the same subset merge.

	Raises:
		InvalidInstanceConfigError: the coefficient range
			holds no admissible value.
	"""
	lo, hi = cfg.coef_range
	if not _coefficients_possible(lo, hi):
		raise InvalidInstanceConfigError(
			f'No coefficient in [{lo}, {hi}] has magnitude '
			f'>= {MIN_ABS_COEF}',
			config=cfg.model_dump_json(),
		)

	rng = np.random.default_rng(cfg.seed)
	terms: list[tuple[float, list]] = []

	for _ in range(cfg.terms):
		size = int(rng.integers(2, cfg.max_degree + 1))
		chosen = rng.choice(cfg.num_vars, size=size, replace=False)

		coef = float(rng.uniform(lo, hi))
		while abs(coef) < MIN_ABS_COEF:
			coef = float(rng.uniform(lo, hi))

		terms.append((coef, [x(int(i) + 1) for i in sorted(chosen)]))

	return Polynomial.from_terms(terms)


def product_instance(num_vars: int) -> Polynomial:
	"""x1 x2 ... xN with coefficient one."""
	return Polynomial.product(x(i) for i in range(1, num_vars + 1))
