from qubochain.exceptions.base import QubochainError


class InteractionGraphError(QubochainError):
	"""Base class for interaction graph errors."""


class DegreeTooHighError(InteractionGraphError):
	"""Interaction graphs exist only for QUBOs."""

	def __init__(
		self,
		message: str,
		*,
		degree: int,
	) -> None:
		super().__init__(message, degree=degree)
		self.degree = degree


class InconsistentChainError(InteractionGraphError):
	"""Substitutions of a chain contradict the graph."""

	def __init__(
		self,
		message: str,
		*,
		chain_id: int,
	) -> None:
		super().__init__(message, chain_id=chain_id)
		self.chain_id = chain_id
