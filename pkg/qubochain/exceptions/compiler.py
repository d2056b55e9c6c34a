from qubochain.exceptions.base import QubochainError


class CompilationError(QubochainError):
	"""Base class for compilation errors."""

	def __init__(
		self,
		message: str,
		*,
		stage: str | None = None,
		**context: object,
	) -> None:
		super().__init__(message, stage=stage, **context)
		self.stage = stage


class CapacityExceededError(CompilationError):
	"""Variables do not fit on the hardware path."""

	def __init__(
		self,
		message: str,
		*,
		required: int,
		available: int,
	) -> None:
		super().__init__(
			message,
			stage='layout',
			required=required,
			available=available,
		)
		self.required = required
		self.available = available


class UnsplitChainsError(CompilationError):
	"""Chains still share vertices at compile time."""

	def __init__(
		self,
		message: str,
		*,
		relations: dict[str, str],
	) -> None:
		super().__init__(
			message,
			stage='chains',
			relations=relations,
		)
		self.relations = relations


class ChainLayoutError(CompilationError):
	"""A chain interaction is not reachable by the scheduler."""

	def __init__(
		self,
		message: str,
		*,
		pair: str,
		distance: int | None = None,
	) -> None:
		super().__init__(
			message,
			stage='schedule',
			pair=pair,
			distance=distance,
		)
		self.pair = pair
		self.distance = distance


class RoutingError(CompilationError):
	"""No coupling path joins the two endpoints."""

	def __init__(
		self,
		message: str,
		*,
		pair: str,
	) -> None:
		super().__init__(
			message,
			stage='route',
			pair=pair,
		)
		self.pair = pair


class InvalidParamsError(CompilationError):
	"""QAOA angles do not match the repetition count."""
