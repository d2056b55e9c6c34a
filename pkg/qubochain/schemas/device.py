"""
This module contains the JSON schema of a device
coupling map, `{"name":str,"num_qubits":int,
"edges":[[int,int],...]}`.
"""

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CouplingMapDocument(BaseModel):
	"""
	Schema for an undirected coupling map. Edges are
	validated against the qubit count on load.
	"""

	model_config = ConfigDict(extra='forbid')

	name: str = Field(
		default='custom',
		description='Device name.',
	)
	description: str | None = Field(
		default=None,
		description=(
			'Free text, used by presets to document their '
			'indexing convention.'
		),
	)
	num_qubits: int = Field(..., ge=0)
	edges: list[tuple[int, int]] = Field(
		default_factory=list,
		description='Coupled qubit pairs.',
	)

	@model_validator(mode='after')
	def check_edges(self) -> 'CouplingMapDocument':
		for a, b in self.edges:
			if a == b:
				raise ValueError(f'self-loop on qubit {a}')
			for q in (a, b):
				if not 0 <= q < self.num_qubits:
					raise ValueError(
						f'qubit {q} outside [0, {self.num_qubits})'
					)
		return self
