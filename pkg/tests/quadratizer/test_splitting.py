"""
This module is used to test the splitting of chains
that share vertices.
"""

from qubochain.graph.chains import (
	ChainRelation,
	classify_chains,
	classify_edges,
	extract_chains,
)
from qubochain.graph.interaction import build_interaction_graph
from qubochain.pubo.parser import parse_polynomial
from qubochain.pubo.polynomial import equality_penalty
from qubochain.pubo.variables import VarId, x, y
from qubochain.quadratizer.chain import quadratize_chain
from qubochain.quadratizer.splitting import (
	resolve_chains,
	split_shared_variables,
)
from qubochain.verify.quadratization import check_quadratization

# --- Test Constants ---

BIFURCATING = 'x1 x2 x3 x4 + x1 x2 x5 x6'
INDEPENDENT = 'x1 x2 x3 + x4 x5 x6'
OVERLAPPING = 'x3 x4 x5 + x1 x2 x5'

# --- Test cases ---


def test_bifurcation_is_split():
	problem = quadratize_chain(parse_polynomial(BIFURCATING))
	dup = VarId.duplicate(y(1), 1)

	split, chains = resolve_chains(problem)

	assert split.duplicates == ((y(1), dup),)
	assert split.extraneous_equalities == ((y(1), dup),)
	assert split.substitutions[2].factors == (x(4), dup)
	assert split.aux_count == 4
	assert split.qubo - problem.qubo == (
		# Rewired penalty minus the original one
		split.substitutions[2].penalty()
		- problem.substitutions[2].penalty()
		+ equality_penalty(y(1), dup, problem.penalty_factor)
	)

	# Chains are disjoint once split
	relations = classify_chains(chains)
	assert set(relations.values()) == {ChainRelation.INDEPENDENT}
	assert [c.path for c in chains] == [
		(x(1), x(2), y(1), x(6), y(2), x(5)),
		(x(4), dup, y(3), x(3)),
	]

	# Mapped back, the original structure shows
	relations = classify_chains(chains, split.duplicates)
	assert relations == {(0, 1): ChainRelation.BIFURCATION}



def test_overlap_is_split():
	poly = parse_polynomial(OVERLAPPING)
	problem = quadratize_chain(poly)
	dup = VarId.duplicate(x(5), 1)

	# Both chains consume x5
	graph = build_interaction_graph(problem.qubo)
	chains = extract_chains(graph, problem.substitutions)
	assert classify_chains(chains) == {
		(0, 1): ChainRelation.OVERLAP
	}

	split, chains = resolve_chains(problem)

	assert split.duplicates == ((x(5), dup),)
	assert split.substitutions[0].factors == (x(4), x(5))
	assert split.substitutions[1].factors == (x(2), dup)
	assert [c.path for c in chains] == [
		(x(4), x(5), y(1), x(3)),
		(x(2), dup, y(2), x(1)),
	]
	relations = classify_chains(chains)
	assert set(relations.values()) == {ChainRelation.INDEPENDENT}
	assert classify_chains(chains, split.duplicates) == {
		(0, 1): ChainRelation.OVERLAP
	}

	# The duplicate only costs when it disagrees
	check = check_quadratization(poly, split)
	assert check.passed

def test_equality_edge_is_extraneous():
	problem = quadratize_chain(parse_polynomial(BIFURCATING))
	dup = VarId.duplicate(y(1), 1)

	split, chains = resolve_chains(problem)
	graph = build_interaction_graph(split.qubo)
	edges = classify_edges(graph, chains)

	assert (y(1), dup) in edges.extraneous_edges


def test_independent_chains_are_kept():
	problem = quadratize_chain(parse_polynomial(INDEPENDENT))
	graph = build_interaction_graph(problem.qubo)
	chains = extract_chains(graph, problem.substitutions)

	assert split_shared_variables(problem, chains) is problem

	resolved, _ = resolve_chains(problem)
	assert resolved is problem
