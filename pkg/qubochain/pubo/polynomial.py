"""
This module contains the multilinear polynomial type
and the operations the quadratizers are built from:
evaluation, penalty terms, pair substitution and pair
frequency counting.
"""

import math
import numbers
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from itertools import combinations
from types import MappingProxyType

from qubochain.exceptions.pubo import (
	InvalidPenaltyError,
	MissingAssignmentError,
	NonBinaryAssignmentError,
	SubstitutionConflictError,
)
from qubochain.pubo.variables import VarId

Monomial = tuple[VarId, ...]
Pair = tuple[VarId, VarId]

# A merged coefficient this small relative to the
# magnitudes that produced it has cancelled
ZERO_TOLERANCE = 1e-12


def monomial(variables: Iterable[VarId]) -> Monomial:
	"""
	Canonical monomial: sorted and duplicate-free,
	since x * x = x for binary variables.
	"""
	return tuple(sorted(set(variables)))


def pair(a: VarId, b: VarId) -> Pair:
	return (a, b) if a < b else (b, a)


class Polynomial:
	"""
	Multilinear pseudo-Boolean polynomial.

	Instances are immutable. Terms are merged on
	construction and zero coefficients never stored.
	"""

	__slots__ = ('_terms',)

	def __init__(
		self,
		terms: Mapping[Iterable[VarId], float]
		| Iterable[tuple[Iterable[VarId], float]]
		| None = None,
	) -> None:
		items = (
			terms.items()
			if isinstance(terms, Mapping)
			else (terms or ())
		)

		merged: dict[Monomial, float] = {}
		scale: dict[Monomial, float] = {}
		for variables, coef in items:
			key = monomial(variables)
			merged[key] = merged.get(key, 0.0) + float(coef)
			scale[key] = scale.get(key, 0.0) + abs(coef)

		self._terms: dict[Monomial, float] = {
			key: coef
			for key, coef in merged.items()
			if abs(coef) > ZERO_TOLERANCE * scale[key]
		}

	# --- Constructors ---

	@classmethod
	def from_terms(
		cls,
		terms: Iterable[tuple[float, Iterable[VarId]]],
	) -> 'Polynomial':
		"""Build from `(coef, variables)` pairs."""
		return cls((vs, coef) for coef, vs in terms)

	@classmethod
	def constant(cls, value: float) -> 'Polynomial':
		return cls({(): value})

	@classmethod
	def product(
		cls,
		variables: Iterable[VarId],
		coef: float = 1.0,
	) -> 'Polynomial':
		return cls({tuple(variables): coef})

	# --- Inspection ---

	@property
	def terms(self) -> Mapping[Monomial, float]:
		return MappingProxyType(self._terms)

	@property
	def degree(self) -> int:
		return max(map(len, self._terms), default=0)

	@property
	def variables(self) -> tuple[VarId, ...]:
		found: set[VarId] = set()
		for key in self._terms:
			found.update(key)
		return tuple(sorted(found))

	@property
	def constant_term(self) -> float:
		return self._terms.get((), 0.0)

	def coefficient(self, variables: Iterable[VarId]) -> float:
		return self._terms.get(monomial(variables), 0.0)

	def linear_terms(self) -> dict[VarId, float]:
		return {
			key[0]: coef
			for key, coef in self._terms.items()
			if len(key) == 1
		}

	def quadratic_terms(self) -> dict[Pair, float]:
		return {
			(key[0], key[1]): coef
			for key, coef in self._terms.items()
			if len(key) == 2
		}

	def items(self) -> list[tuple[Monomial, float]]:
		"""
		Terms in canonical order: higher degree first,
		then by monomial.
		"""
		return sorted(
			self._terms.items(),
			key=lambda item: (-len(item[0]), item[0]),
		)

	def abs_sum(self, *, include_constant: bool = False) -> float:
		return math.fsum(
			abs(coef)
			for key, coef in self._terms.items()
			if include_constant or key
		)

	# --- Evaluation ---

	def evaluate(self, assignment: Mapping[VarId, int]) -> float:
		return evaluate(self, assignment)

	# --- Arithmetic ---

	def _coerce(self, other: object) -> 'Polynomial | None':
		if isinstance(other, Polynomial):
			return other
		if isinstance(other, numbers.Real):
			return Polynomial.constant(other)
		return None

	def __add__(self, other: object) -> 'Polynomial':
		rhs = self._coerce(other)
		if rhs is None:
			return NotImplemented
		return Polynomial(
			[*self._terms.items(), *rhs._terms.items()]
		)

	__radd__ = __add__

	def __neg__(self) -> 'Polynomial':
		return Polynomial(
			(key, -coef) for key, coef in self._terms.items()
		)

	def __sub__(self, other: object) -> 'Polynomial':
		rhs = self._coerce(other)
		if rhs is None:
			return NotImplemented
		return self + (-rhs)

	def __rsub__(self, other: object) -> 'Polynomial':
		return (-self) + other

	def __mul__(self, other: object) -> 'Polynomial':
		if isinstance(other, numbers.Real):
			return Polynomial(
				(key, coef * other)
				for key, coef in self._terms.items()
			)
		if not isinstance(other, Polynomial):
			return NotImplemented

		return Polynomial(
			(lk + rk, lc * rc)
			for lk, lc in self._terms.items()
			for rk, rc in other._terms.items()
		)

	__rmul__ = __mul__

	# --- Protocols ---

	def __eq__(self, other: object) -> bool:
		if not isinstance(other, Polynomial):
			return NotImplemented
		return self._terms == other._terms

	def __hash__(self) -> int:
		return hash(frozenset(self._terms.items()))

	def __len__(self) -> int:
		return len(self._terms)

	def __bool__(self) -> bool:
		return bool(self._terms)

	def __iter__(self) -> Iterator[tuple[Monomial, float]]:
		return iter(self.items())

	def __str__(self) -> str:
		from qubochain.pubo.parser import serialize_polynomial

		return serialize_polynomial(self)

	def __repr__(self) -> str:
		return f'Polynomial({str(self)!r})'


def evaluate(
	poly: Polynomial,
	assignment: Mapping[VarId, int],
) -> float:
	"""
	Exact value of `poly` under a 0/1 assignment.

	Raises:
		MissingAssignmentError: a variable of `poly`
			has no value.
		NonBinaryAssignmentError: a variable of `poly`
			is neither 0 nor 1.
	"""
	missing = [
		v for v in poly.variables if v not in assignment
	]
	if missing:
		raise MissingAssignmentError(
			'Assignment does not cover the polynomial',
			variables=[v.name for v in missing],
		)

	invalid = {
		v.name: assignment[v]
		for v in poly.variables
		if assignment[v] not in (0, 1)
	}
	if invalid:
		raise NonBinaryAssignmentError(
			'Assignment values must be 0 or 1',
			values=invalid,
		)

	return math.fsum(
		coef
		for key, coef in poly.terms.items()
		if all(assignment[v] for v in key)
	)


def penalty_term(
	a: VarId,
	b: VarId,
	y: VarId,
	penalty_factor: float,
) -> Polynomial:
	"""
	Penalty enforcing `y = a * b`:
	c_P (ab - 2ay - 2by + 3y). It vanishes exactly when
	the constraint holds and is at least c_P otherwise.
	"""
	if penalty_factor <= 0:
		raise InvalidPenaltyError(
			'Penalty factor must be positive',
			penalty_factor=penalty_factor,
		)
	if a == b:
		raise SubstitutionConflictError(
			'Penalty factors must be distinct variables',
			variable=a.name,
		)
	if y in (a, b):
		raise SubstitutionConflictError(
			'Auxiliary variable coincides with a factor',
			variable=y.name,
		)

	c = penalty_factor
	return Polynomial(
		{
			(a, b): c,
			(a, y): -2 * c,
			(b, y): -2 * c,
			(y,): 3 * c,
		}
	)


def equality_penalty(
	original: VarId,
	duplicate: VarId,
	penalty_factor: float,
) -> Polynomial:
	"""
	c_P (x - x')^2 written for binary variables:
	c_P (x + x' - 2xx').
	"""
	if penalty_factor <= 0:
		raise InvalidPenaltyError(
			'Penalty factor must be positive',
			penalty_factor=penalty_factor,
		)
	if original == duplicate:
		raise SubstitutionConflictError(
			'A variable cannot duplicate itself',
			variable=original.name,
		)

	c = penalty_factor
	return Polynomial(
		{
			(original,): c,
			(duplicate,): c,
			(original, duplicate): -2 * c,
		}
	)


def substitute_pair(
	poly: Polynomial,
	a: VarId,
	b: VarId,
	y: VarId,
) -> Polynomial:
	"""
	Replace the product `a * b` by `y` in every term
	containing both. Coefficients are kept and no
	penalty is added.
	"""
	if y in poly.variables:
		raise SubstitutionConflictError(
			'Substitution target already occurs in the '
			'polynomial',
			variable=y.name,
		)
	if a == b or y in (a, b):
		raise SubstitutionConflictError(
			'Substituted pair must be two distinct '
			'variables other than the target',
			variable=y.name,
		)

	replaced: list[tuple[Monomial, float]] = []
	for key, coef in poly.terms.items():
		if a in key and b in key:
			key = tuple(v for v in key if v not in (a, b)) + (
				y,
			)
		replaced.append((key, coef))

	return Polynomial(replaced)


def pair_frequencies(
	poly: Polynomial,
	min_degree: int = 3,
	*,
	weighted: bool = False,
) -> Counter[Pair]:
	"""
	Count, over the terms of degree >= `min_degree`,
	how often each unordered pair of variables occurs
	together. With `weighted` the count adds |coef|
	instead of 1.
	"""
	if min_degree < 3:
		raise ValueError(
			f'min_degree must be at least 3, got {min_degree}'
		)

	counts: Counter[Pair] = Counter()
	for key, coef in poly.terms.items():
		if len(key) < min_degree:
			continue
		weight = abs(coef) if weighted else 1
		for p in combinations(key, 2):
			counts[p] += weight

	return counts
