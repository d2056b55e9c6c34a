from qubochain.exceptions.base import QubochainError


class VerificationError(QubochainError):
	"""Base class for oracle errors."""


class OracleSizeError(VerificationError):
	"""Exhaustive enumeration would be too large."""

	def __init__(
		self,
		message: str,
		*,
		count: int,
		limit: int,
	) -> None:
		super().__init__(message, count=count, limit=limit)
		self.count = count
		self.limit = limit


class NonDiagonalGateError(VerificationError):
	"""Phase oracle met a gate that mixes basis states."""

	def __init__(
		self,
		message: str,
		*,
		gate: str,
		index: int,
	) -> None:
		super().__init__(message, gate=gate, index=index)
		self.gate = gate
		self.index = index
