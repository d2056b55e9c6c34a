from qubochain.exceptions.base import QubochainError


class BenchError(QubochainError):
	"""Base class for benchmark harness errors."""


class InvalidInstanceConfigError(BenchError):
	"""Instance configuration cannot be sampled."""

	def __init__(
		self,
		message: str,
		*,
		config: str | None = None,
	) -> None:
		super().__init__(message, config=config)
		self.config = config
