"""
This module contains the quadratized problem type,
its substitution records and the penalty factor rule
shared by every quadratizer.
"""

from collections.abc import Iterable
from dataclasses import dataclass, field, replace

from pydantic import ValidationError

from qubochain.exceptions.pubo import (
	InvalidPenaltyError,
	PolynomialParseError,
	SubstitutionConflictError,
)
from qubochain.pubo.parser import (
	polynomial_from_document,
	polynomial_to_document,
	resolve_variables,
)
from qubochain.pubo.polynomial import (
	Polynomial,
	equality_penalty,
	penalty_term,
)
from qubochain.pubo.variables import VarId, VarKind
from qubochain.schemas.problem import (
	DuplicateDocument,
	QuadratizedProblemDocument,
	SubstitutionDocument,
)

DuplicatePair = tuple[VarId, VarId]


@dataclass(frozen=True)
class Substitution:
	"""Record of `aux = factor_a * factor_b`."""

	aux: VarId
	factor_a: VarId
	factor_b: VarId
	penalty_factor: float
	chain_id: int = 0

	def __post_init__(self) -> None:
		if self.aux.kind is not VarKind.AUXILIARY:
			raise SubstitutionConflictError(
				'Substitution target must be an auxiliary',
				variable=self.aux.name,
			)
		if self.aux in (self.factor_a, self.factor_b):
			raise SubstitutionConflictError(
				'Auxiliary cannot be one of its own factors',
				variable=self.aux.name,
			)
		if self.factor_a == self.factor_b:
			raise SubstitutionConflictError(
				'Substitution factors must differ',
				variable=self.factor_a.name,
			)
		if self.penalty_factor <= 0:
			raise InvalidPenaltyError(
				'Penalty factor must be positive',
				penalty_factor=self.penalty_factor,
			)

	@property
	def factors(self) -> tuple[VarId, VarId]:
		return (self.factor_a, self.factor_b)

	@property
	def vertices(self) -> tuple[VarId, VarId, VarId]:
		return (self.aux, self.factor_a, self.factor_b)

	def penalty(self) -> Polynomial:
		return penalty_term(
			self.factor_a,
			self.factor_b,
			self.aux,
			self.penalty_factor,
		)

	def rewired(
		self,
		mapping: dict[VarId, VarId],
	) -> 'Substitution':
		return replace(
			self,
			factor_a=mapping.get(self.factor_a, self.factor_a),
			factor_b=mapping.get(self.factor_b, self.factor_b),
		)


def select_penalty_factor(poly: Polynomial) -> float:
	"""
	1 + the sum of |coef| over the non-constant terms.
	No assignment can lower the cost by more than that
	sum, so no constraint violation is profitable.
	"""
	return 1.0 + poly.abs_sum()


def resolve_penalty_factor(
	poly: Polynomial,
	penalty_factor: float | None,
) -> float:
	if penalty_factor is None:
		return select_penalty_factor(poly)
	if penalty_factor <= 0:
		raise InvalidPenaltyError(
			'Penalty factor must be positive',
			penalty_factor=penalty_factor,
		)
	return float(penalty_factor)


def assemble_qubo(
	objective: Polynomial,
	substitutions: Iterable[Substitution],
	duplicates: Iterable[DuplicatePair],
	penalty_factor: float,
) -> Polynomial:
	"""
	Objective plus every substitution penalty plus
	c_P (x + x' - 2xx') per duplicate.
	"""
	qubo = objective
	for sub in substitutions:
		qubo = qubo + sub.penalty()
	for original, duplicate in duplicates:
		qubo = qubo + equality_penalty(
			original,
			duplicate,
			penalty_factor,
		)
	return qubo


@dataclass(frozen=True)
class QuadratizedProblem:
	"""
	A QUBO together with the substitutions and
	duplicates that produced it from `original`.
	"""

	qubo: Polynomial
	substitutions: tuple[Substitution, ...]
	original: Polynomial
	objective: Polynomial
	penalty_factor: float
	strategy: str
	duplicates: tuple[DuplicatePair, ...] = ()
	extraneous_equalities: tuple[DuplicatePair, ...] = field(
		default=()
	)

	def __post_init__(self) -> None:
		if self.qubo.degree > 2:
			raise ValueError(
				f'QUBO has degree {self.qubo.degree}'
			)

		declared = {s.aux for s in self.substitutions} | {
			d for _, d in self.duplicates
		}
		undeclared = [
			v
			for v in self.qubo.variables
			if v.kind is not VarKind.PROBLEM
			and v not in declared
			and v not in self.original.variables
		]
		if undeclared:
			raise SubstitutionConflictError(
				'QUBO uses undeclared variables',
				variable=', '.join(v.name for v in undeclared),
			)

	@property
	def auxiliaries(self) -> tuple[VarId, ...]:
		return tuple(s.aux for s in self.substitutions)

	@property
	def aux_count(self) -> int:
		"""Auxiliaries plus duplicates added to the input."""
		return len(self.substitutions) + len(self.duplicates)

	@property
	def num_variables(self) -> int:
		return len(self.qubo.variables)

	def chain_ids(self) -> list[int]:
		return sorted({s.chain_id for s in self.substitutions})

	def chain(self, chain_id: int) -> list[Substitution]:
		return [
			s for s in self.substitutions if s.chain_id == chain_id
		]

	# --- Serialization ---

	def to_document(self) -> QuadratizedProblemDocument:
		return QuadratizedProblemDocument(
			strategy=self.strategy,
			penalty_factor=self.penalty_factor,
			original=polynomial_to_document(self.original),
			objective=polynomial_to_document(self.objective),
			qubo=polynomial_to_document(self.qubo),
			substitutions=[
				SubstitutionDocument(
					aux=s.aux.name,
					factor_a=s.factor_a.name,
					factor_b=s.factor_b.name,
					penalty_factor=s.penalty_factor,
					chain_id=s.chain_id,
				)
				for s in self.substitutions
			],
			duplicates=[
				DuplicateDocument(
					original=o.name,
					duplicate=d.name,
				)
				for o, d in self.duplicates
			],
			extraneous_equalities=[
				(a.name, b.name)
				for a, b in self.extraneous_equalities
			],
		)

	def to_json(self, *, indent: int | None = 2) -> str:
		return self.to_document().model_dump_json(
			indent=indent
		)

	@classmethod
	def from_document(
		cls,
		document: QuadratizedProblemDocument,
	) -> 'QuadratizedProblem':
		names = [
			name
			for s in document.substitutions
			for name in (s.aux, s.factor_a, s.factor_b)
		]
		names += [
			name
			for d in document.duplicates
			for name in (d.original, d.duplicate)
		]
		names += [
			name
			for pair in document.extraneous_equalities
			for name in pair
		]
		lookup = resolve_variables(names)

		return cls(
			qubo=polynomial_from_document(document.qubo),
			substitutions=tuple(
				Substitution(
					aux=lookup[s.aux],
					factor_a=lookup[s.factor_a],
					factor_b=lookup[s.factor_b],
					penalty_factor=s.penalty_factor,
					chain_id=s.chain_id,
				)
				for s in document.substitutions
			),
			original=polynomial_from_document(document.original),
			objective=polynomial_from_document(
				document.objective
			),
			penalty_factor=document.penalty_factor,
			strategy=document.strategy,
			duplicates=tuple(
				(lookup[d.original], lookup[d.duplicate])
				for d in document.duplicates
			),
			extraneous_equalities=tuple(
				(lookup[a], lookup[b])
				for a, b in document.extraneous_equalities
			),
		)

	@classmethod
	def from_json(cls, text: str | bytes) -> 'QuadratizedProblem':
		try:
			document = (
				QuadratizedProblemDocument.model_validate_json(
					text
				)
			)
		except ValidationError as e:
			raise PolynomialParseError(
				'Malformed quadratized problem JSON',
				text=str(e),
			) from e
		return cls.from_document(document)
