"""
This module contains the assembly of the full
verification report from the individual oracles.
"""

from qubochain.circuit.connectivity import check_connectivity
from qubochain.circuit.ir import Circuit
from qubochain.device.topology import CouplingMap
from qubochain.pubo.polynomial import Polynomial
from qubochain.quadratizer.problem import QuadratizedProblem
from qubochain.schemas.report import VerificationReport
from qubochain.verify.phase_oracle import (
	permutation_matches,
	phase_oracle_check,
)
from qubochain.verify.quadratization import (
	check_quadratization,
)


def build_report(
	original: Polynomial,
	problem: QuadratizedProblem,
	*,
	circuit: Circuit | None = None,
	gamma: float | None = None,
	cmap: CouplingMap | None = None,
) -> VerificationReport:
	"""
	Run every oracle that applies.

	Args:
		original: Cost function before quadratization.
		problem: Its quadratization.
		circuit: Native cost layer; enables the phase
			check when `gamma` is given too.
		gamma: Cost angle the layer was built with.
		cmap: Device; enables the connectivity check.
	"""
	check = check_quadratization(original, problem)
	report = VerificationReport(**check.model_dump())

	if circuit is None:
		return report

	report.permutation_ok = permutation_matches(circuit)
	if gamma is not None:
		ok, error = phase_oracle_check(
			circuit,
			problem.qubo,
			gamma,
			offset=problem.qubo.constant_term,
		)
		report.phase_ok = ok
		report.max_phase_error = error
	if cmap is not None:
		violations = check_connectivity(circuit, cmap)
		report.connectivity_ok = not violations
		report.violations = [str(v) for v in violations]

	return report
