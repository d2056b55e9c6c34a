class QubochainError(Exception):
	"""
	Base class for every error raised by the toolkit.

	Subclasses pass their contextual fields as keyword
	arguments; fields set to None are left out of the
	rendered message.
	"""

	def __init__(
		self,
		message: str,
		**context: object,
	) -> None:
		super().__init__(message)
		self.message = message
		self.context = context

	def __str__(self) -> str:
		parts: list[str] = [super().__str__()]

		for key, value in self.context.items():
			if value is None:
				continue
			label = key.replace('_', ' ').capitalize()
			parts.append(f'{label}: {value}')

		return '\n'.join(parts)

	def __repr__(self) -> str:
		fields = ''.join(
			f', {key}={value!r}'
			for key, value in self.context.items()
		)
		return (
			f'{self.__class__.__name__}('
			f'message={self.message!r}{fields})'
		)
