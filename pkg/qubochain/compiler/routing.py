"""
This module contains the SWAP router for couplings that
the cost-layer schedule does not cover.
"""

import logging
from collections.abc import Iterable

import networkx as nx

from qubochain.circuit.ir import Circuit, GateKind, Layout
from qubochain.device.topology import CouplingMap
from qubochain.exceptions.compiler import RoutingError
from qubochain.pubo.variables import VarId
from qubochain.utils.logging import stage

logger = logging.getLogger(__name__)

Coupling = tuple[VarId, VarId, float]


def route_extraneous(
	circuit: Circuit,
	extraneous: Iterable[Coupling],
	cmap: CouplingMap,
	gamma: float,
	*,
	layout: Layout | None = None,
) -> Circuit:
	"""
	Append RZZ(2 c gamma) for each coupling, moving the
	first endpoint along a shortest coupling path until
	it sits next to the second. Couplings are handled in
	increasing order of their starting distance. SWAPs
	are not undone.

	Args:
		circuit: Circuit to extend in place.
		extraneous: `(u, v, coef)` triples.
		cmap: Device connectivity.
		gamma: Cost angle.
		layout: Expected current layout, checked against
			`circuit.final_layout` when given.

	Raises:
		RoutingError: the endpoints sit in different
			connected components.
	"""
	if layout is not None and dict(layout) != circuit.final_layout:
		raise ValueError(
			'Layout does not match the circuit final layout'
		)

	def start_distance(item: Coupling) -> tuple[int, VarId, VarId]:
		u, v, _ = item
		found = cmap.distance(
			circuit.final_layout[u],
			circuit.final_layout[v],
		)
		if found is None:
			raise RoutingError(
				f'No coupling path joins {u} and {v}',
				pair=f'{u}*{v}',
			)
		return (found, *sorted((u, v)))

	ordered = sorted(
		(item for item in extraneous if item[2] != 0.0),
		key=start_distance,
	)
	before = circuit.count(GateKind.SWAP)

	for u, v, coef in ordered:
		source = circuit.final_layout[u]
		target = circuit.final_layout[v]
		route = nx.shortest_path(cmap.graph, source, target)
		for hop in route[1:-1]:
			circuit.swap(source, hop)
			source = hop
		circuit.rzz(source, target, 2.0 * coef * gamma)

	logger.debug(
		f'Routed {len(ordered)} extraneous couplings with '
		f'{circuit.count(GateKind.SWAP) - before} SWAPs',
		extra=stage('route'),
	)
	return circuit
