from qubochain.exceptions.base import QubochainError


class PolynomialError(QubochainError):
	"""Base class for polynomial errors."""


class PolynomialParseError(PolynomialError):
	"""Polynomial text or JSON does not follow the grammar."""

	def __init__(
		self,
		message: str,
		*,
		position: int | None = None,
		text: str | None = None,
	) -> None:
		super().__init__(
			message,
			position=position,
			text=text,
		)
		self.position = position
		self.text = text


class UnknownVariableError(PolynomialParseError):
	"""A token looks like a variable but names none."""

	def __init__(
		self,
		message: str,
		*,
		token: str,
		position: int | None = None,
	) -> None:
		super().__init__(message, position=position)
		self.context['token'] = token
		self.token = token


class MissingAssignmentError(PolynomialError):
	"""An assignment does not cover every variable."""

	def __init__(
		self,
		message: str,
		*,
		variables: list[str],
	) -> None:
		super().__init__(message, variables=variables)
		self.variables = variables


class NonBinaryAssignmentError(PolynomialError):
	"""A variable is assigned neither 0 nor 1."""

	def __init__(
		self,
		message: str,
		*,
		values: dict[str, object],
	) -> None:
		super().__init__(message, values=values)
		self.values = values


class InvalidPenaltyError(PolynomialError):
	"""Penalty factor is not strictly positive."""

	def __init__(
		self,
		message: str,
		*,
		penalty_factor: float,
	) -> None:
		super().__init__(
			message,
			penalty_factor=penalty_factor,
		)
		self.penalty_factor = penalty_factor


class SubstitutionConflictError(PolynomialError):
	"""Variables of a substitution coincide or clash."""

	def __init__(
		self,
		message: str,
		*,
		variable: str,
	) -> None:
		super().__init__(message, variable=variable)
		self.variable = variable
