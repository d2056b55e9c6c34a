"""
This module contains the JSON schema of a circuit,
`{"num_qubits":n,"initial_layout":{...},
"final_layout":{...},"gates":[{"g":"rzz","q":[a,b],
"p":t},...]}`.
"""

from pydantic import BaseModel, ConfigDict, Field


class GateDocument(BaseModel):
	"""One gate; `p` is present for rotations only."""

	model_config = ConfigDict(extra='forbid')

	g: str = Field(..., description='Gate name.')
	q: list[int] = Field(..., description='Physical qubits.')
	p: float | None = Field(
		default=None,
		description='Rotation angle in radians.',
	)


class CircuitDocument(BaseModel):
	"""Schema for a serialized circuit."""

	model_config = ConfigDict(extra='forbid')

	num_qubits: int = Field(..., ge=0)
	initial_layout: dict[str, int] = Field(
		default_factory=dict,
		description='Variable name to physical qubit.',
	)
	final_layout: dict[str, int] = Field(
		default_factory=dict,
	)
	gates: list[GateDocument] = Field(default_factory=list)
