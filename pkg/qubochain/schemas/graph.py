"""
This module contains the JSON schema of an interaction
graph, `{"vertices":[...],"edges":[[u,v,w],...]}`, and
of the chain report printed next to it.
"""

from pydantic import BaseModel, ConfigDict, Field


class InteractionGraphDocument(BaseModel):
	"""Schema for a serialized interaction graph."""

	model_config = ConfigDict(extra='forbid')

	vertices: list[str] = Field(
		default_factory=list,
		description='Variable names in canonical order.',
	)
	edges: list[tuple[str, str, float]] = Field(
		default_factory=list,
		description='Weighted edges, one per quadratic term.',
	)


class ChainDocument(BaseModel):
	"""One chain of triangles and its traversal path."""

	model_config = ConfigDict(extra='forbid')

	chain_id: int
	path: list[str]
	triangles: list[tuple[str, str, str]]


class ChainReportDocument(BaseModel):
	"""Chains, their pairwise relations and edge split."""

	model_config = ConfigDict(extra='forbid')

	graph: InteractionGraphDocument
	chains: list[ChainDocument] = Field(default_factory=list)
	relations: dict[str, str] = Field(
		default_factory=dict,
		description='Relation per chain pair, keyed "i-j".',
	)
	chain_edges: list[tuple[str, str]] = Field(
		default_factory=list,
	)
	extraneous_edges: list[tuple[str, str]] = Field(
		default_factory=list,
	)
