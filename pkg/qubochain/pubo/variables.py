"""
This module contains the variable identifiers used
throughout the toolkit: problem variables `x{i}`,
auxiliary variables `y{i}` and duplicates which mirror
another variable and are written `{origin}p{i}`.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from enum import IntEnum
from functools import total_ordering


class VarKind(IntEnum):
	"""
	Kind of a binary variable. The integer values
	give the canonical ordering
	Problem < Auxiliary < Duplicate.
	"""

	PROBLEM = 0
	AUXILIARY = 1
	DUPLICATE = 2


PREFIXES = {
	VarKind.PROBLEM: 'x',
	VarKind.AUXILIARY: 'y',
}


@total_ordering
@dataclass(frozen=True, eq=True)
class VarId:
	"""
	Identifier of a binary variable.

	`(kind, index)` is unique within a problem, so the
	canonical order only looks at those two fields.
	"""

	kind: VarKind
	index: int
	origin: 'VarId | None' = None

	def __post_init__(self) -> None:
		if self.index < 0:
			raise ValueError(
				f'Variable index must be non-negative, '
				f'got {self.index}'
			)

		if self.kind is VarKind.DUPLICATE:
			if self.origin is None:
				raise ValueError(
					'Duplicate variables need an origin'
				)
			if self.origin.kind is VarKind.DUPLICATE:
				raise ValueError(
					'A duplicate cannot mirror another '
					'duplicate'
				)
		elif self.origin is not None:
			raise ValueError(
				f'{self.kind.name.title()} variables '
				'never carry an origin'
			)

	@classmethod
	def problem(cls, index: int) -> 'VarId':
		return cls(VarKind.PROBLEM, index)

	@classmethod
	def auxiliary(cls, index: int) -> 'VarId':
		return cls(VarKind.AUXILIARY, index)

	@classmethod
	def duplicate(
		cls,
		origin: 'VarId',
		index: int,
	) -> 'VarId':
		return cls(VarKind.DUPLICATE, index, origin)

	@property
	def sort_key(self) -> tuple[int, int]:
		return (int(self.kind), self.index)

	@property
	def name(self) -> str:
		if self.kind is VarKind.DUPLICATE:
			assert self.origin is not None
			return f'{self.origin.name}p{self.index}'
		return f'{PREFIXES[self.kind]}{self.index}'

	@property
	def root(self) -> 'VarId':
		"""The variable a duplicate mirrors, else itself."""
		return self.origin if self.origin is not None else self

	def __lt__(self, other: object) -> bool:
		if not isinstance(other, VarId):
			return NotImplemented
		return self.sort_key < other.sort_key

	def __str__(self) -> str:
		return self.name

	def __repr__(self) -> str:
		return f'VarId({self.name})'


def x(index: int) -> VarId:
	"""Shorthand for the problem variable `x{index}`."""
	return VarId.problem(index)


def y(index: int) -> VarId:
	"""Shorthand for the auxiliary variable `y{index}`."""
	return VarId.auxiliary(index)


def next_index(
	variables: Iterable[VarId],
	kind: VarKind,
) -> int:
	"""
	Smallest index above every existing variable of
	the given kind (1 when there is none).
	"""
	used = [v.index for v in variables if v.kind is kind]
	return max(used, default=0) + 1
