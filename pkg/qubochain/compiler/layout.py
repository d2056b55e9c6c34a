"""
This module contains the placement of chains on a
hardware path.
"""

import logging
from collections.abc import Iterable, Sequence

from qubochain.circuit.ir import Layout
from qubochain.device.paths import HardwarePath
from qubochain.exceptions.compiler import (
	CapacityExceededError,
	UnsplitChainsError,
)
from qubochain.graph.chains import TriangleChain
from qubochain.pubo.variables import VarId
from qubochain.utils.logging import stage

logger = logging.getLogger(__name__)


def map_chains_to_path(
	chains: Sequence[TriangleChain],
	path: HardwarePath,
	*,
	loose: Iterable[VarId] = (),
) -> Layout:
	"""
	Concatenate the chain paths in chain id order along
	the hardware path, followed by the `loose`
	variables that belong to no chain. Slots are packed
	without gaps.

	Raises:
		CapacityExceededError: more variables than path
			qubits.
	"""
	order = [
		v
		for chain in sorted(chains, key=lambda c: c.chain_id)
		for v in chain.path
	]
	order.extend(loose)

	if len(order) > len(path):
		raise CapacityExceededError(
			f'{len(order)} variables do not fit a hardware '
			f'path of {len(path)} qubits',
			required=len(order),
			available=len(path),
		)
	if len(set(order)) != len(order):
		raise UnsplitChainsError(
			'A variable appears in more than one chain',
			relations={},
		)

	logger.debug(
		f'Placed {len(order)} variables on path qubits '
		f'{path[0]}..{path[len(order) - 1] if order else "-"}',
		extra=stage('layout'),
	)
	return {v: path[i] for i, v in enumerate(order)}
