"""
This module contains exhaustive enumeration over
binary assignments, vectorised with numpy in chunks
of consecutive assignment indices. Bit k of an index
is the value of the k-th variable.
"""

from collections.abc import Iterator, Sequence

import numpy as np

from qubochain.exceptions.verify import OracleSizeError
from qubochain.pubo.polynomial import Polynomial
from qubochain.pubo.variables import VarId

MAX_VARIABLES = 24
CHUNK_BITS = 16
TOLERANCE = 1e-9

Assignment = dict[VarId, int]


def check_size(count: int, limit: int = MAX_VARIABLES) -> None:
	if count > limit:
		raise OracleSizeError(
			f'Cannot enumerate 2^{count} assignments',
			count=count,
			limit=limit,
		)


def index_bits(indices: np.ndarray, width: int) -> np.ndarray:
	"""Boolean table, one row per index, one column per bit."""
	shifts = np.arange(width, dtype=np.int64)
	return ((indices[:, None] >> shifts) & 1).astype(bool)


def chunks(width: int) -> Iterator[np.ndarray]:
	total = 1 << width
	step = 1 << CHUNK_BITS
	for start in range(0, total, step):
		yield np.arange(
			start,
			min(start + step, total),
			dtype=np.int64,
		)


def energies(
	poly: Polynomial,
	variables: Sequence[VarId],
	bits: np.ndarray,
) -> np.ndarray:
	"""
	Value of `poly` on every row of `bits`, whose
	columns follow `variables`.
	"""
	column = {v: i for i, v in enumerate(variables)}
	total = np.zeros(len(bits), dtype=np.float64)
	for key, coef in poly.terms.items():
		if not key:
			total += coef
			continue
		idx = [column[v] for v in key]
		total += coef * np.all(bits[:, idx], axis=1)
	return total


def to_assignment(
	index: int,
	variables: Sequence[VarId],
) -> Assignment:
	return {v: (index >> k) & 1 for k, v in enumerate(variables)}


class MinimumTracker:
	"""Running minimum and the indices within tolerance of it."""

	def __init__(self, tolerance: float = TOLERANCE) -> None:
		self.tolerance = tolerance
		self.value = np.inf
		self._indices: list[np.ndarray] = []
		self._values: list[np.ndarray] = []

	def update(
		self,
		indices: np.ndarray,
		values: np.ndarray,
	) -> None:
		low = float(values.min())
		if low < self.value:
			self.value = low
			keep = [v <= low + self.tolerance for v in self._values]
			self._indices = [
				i[k] for i, k in zip(self._indices, keep, strict=True)
			]
			self._values = [
				v[k] for v, k in zip(self._values, keep, strict=True)
			]

		mask = values <= self.value + self.tolerance
		if mask.any():
			self._indices.append(indices[mask])
			self._values.append(values[mask])

	@property
	def argmins(self) -> np.ndarray:
		if not self._indices:
			return np.zeros(0, dtype=np.int64)
		return np.sort(np.concatenate(self._indices))


def brute_force_min(
	poly: Polynomial,
	*,
	limit: int = MAX_VARIABLES,
	tolerance: float = TOLERANCE,
) -> tuple[float, list[Assignment]]:
	"""
	Exact minimum of `poly` and every assignment within
	`tolerance` of it, in increasing index order.

	Raises:
		OracleSizeError: more than `limit` variables.
	"""
	variables = poly.variables
	check_size(len(variables), limit)

	tracker = MinimumTracker(tolerance)
	for indices in chunks(len(variables)):
		bits = index_bits(indices, len(variables))
		tracker.update(indices, energies(poly, variables, bits))

	return float(tracker.value), [
		to_assignment(int(i), variables) for i in tracker.argmins
	]
