from qubochain.exceptions.base import QubochainError


class DeviceError(QubochainError):
	"""Base class for coupling map errors."""


class CouplingMapError(DeviceError):
	"""Coupling map document is malformed."""

	def __init__(
		self,
		message: str,
		*,
		detail: str | None = None,
	) -> None:
		super().__init__(message, detail=detail)
		self.detail = detail


class InvalidTopologyError(DeviceError):
	"""Generator parameters do not describe a lattice."""


class EmptyDeviceError(DeviceError):
	"""Operation needs at least one qubit."""


class UnknownDeviceError(DeviceError):
	"""Device specifier names no known device."""

	def __init__(
		self,
		message: str,
		*,
		specifier: str,
	) -> None:
		super().__init__(message, specifier=specifier)
		self.specifier = specifier
