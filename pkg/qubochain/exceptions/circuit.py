from qubochain.exceptions.base import QubochainError


class CircuitError(QubochainError):
	"""Base class for circuit errors."""


class GateArityError(CircuitError):
	"""Gate operands or parameter do not match its kind."""

	def __init__(
		self,
		message: str,
		*,
		gate: str,
	) -> None:
		super().__init__(message, gate=gate)
		self.gate = gate


class UnsupportedFormatError(CircuitError):
	"""Serialization format tag is unknown."""

	def __init__(
		self,
		message: str,
		*,
		format: str,
	) -> None:
		super().__init__(message, format=format)
		self.format = format
