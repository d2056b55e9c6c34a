"""
This module contains the selection policy shared by
both quadratizers: how frequencies are counted and how
ties between equally frequent candidates are broken.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from typing import TypeVar

import numpy as np

from qubochain.utils.logging import stage

logger = logging.getLogger(__name__)

K = TypeVar('K')

# Frequencies closer than this count as a tie when
# they are coefficient weighted
WEIGHT_TOLERANCE = 1e-9


class TieBreak(str, Enum):
	"""
	Tie-breaking rule among equally frequent
	candidates.

	CANONICAL scans candidates in canonical
	(kind, index) order. The baseline keeps the lowest
	candidate and the chain greedy the highest one.
	RANDOM picks uniformly with a seeded generator.
	"""

	CANONICAL = 'canonical'
	RANDOM = 'random'


@dataclass(frozen=True)
class SelectionPolicy:
	tie_break: TieBreak = TieBreak.CANONICAL
	seed: int | None = None
	weighted: bool = False


def fresh_seed() -> int:
	"""Seed drawn from OS entropy, printable and reusable."""
	sequence = np.random.SeedSequence()
	state = sequence.generate_state(1)
	return int(state[0])


class Selector:
	"""
	Stateful picker applying a `SelectionPolicy`. One
	instance is used per quadratization so random
	tie-breaking is reproducible from the seed.
	"""

	def __init__(
		self,
		policy: SelectionPolicy,
		*,
		prefer_highest: bool,
		name: str,
	) -> None:
		self.policy = policy
		self.prefer_highest = prefer_highest
		self.seed = policy.seed
		if (
			policy.tie_break is TieBreak.RANDOM
			and self.seed is None
		):
			self.seed = fresh_seed()
		self.rng = np.random.default_rng(self.seed)

		direction = 'highest' if prefer_highest else 'lowest'
		rule = (
			f'uniform random (seed={self.seed})'
			if policy.tie_break is TieBreak.RANDOM
			else f'{direction} canonical candidate'
		)
		counting = (
			'|coefficient| weighted'
			if policy.weighted
			else 'term count'
		)
		logger.info(
			f'[{name}] Tie-break rule: {rule}; '
			f'frequency: {counting}',
			extra=stage('quadratize'),
		)

	def choose(self, counts: Mapping[K, float]) -> K:
		"""
		Most frequent key of `counts`, ties broken by
		the policy.
		"""
		if not counts:
			raise ValueError('No candidates to choose from')

		best = max(counts.values())
		tied = sorted(
			key
			for key, value in counts.items()
			if best - value <= WEIGHT_TOLERANCE
		)

		if len(tied) == 1:
			return tied[0]

		if self.policy.tie_break is TieBreak.RANDOM:
			choice = tied[int(self.rng.integers(len(tied)))]
		elif self.prefer_highest:
			choice = tied[-1]
		else:
			choice = tied[0]

		logger.debug(
			f'Tie among {len(tied)} candidates '
			f'(frequency {best:g}), picked {_label(choice)}',
			extra=stage('quadratize'),
		)
		return choice


def _label(key: object) -> str:
	if isinstance(key, tuple):
		return '*'.join(str(k) for k in key)
	return str(key)
