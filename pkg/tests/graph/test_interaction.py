"""
This module is used to test interaction graphs and
their DOT rendering.
"""

import pytest

from qubochain.exceptions.graph import DegreeTooHighError
from qubochain.graph.interaction import (
	build_interaction_graph,
	to_dot,
)
from qubochain.pubo.parser import parse_polynomial
from qubochain.pubo.variables import x, y
from qubochain.quadratizer.baseline import quadratize_baseline
from qubochain.quadratizer.chain import quadratize_chain
from tests.utils.builders import product

# --- Test cases ---


def test_example_one_graph():
	qubo = quadratize_baseline(product(4)).qubo
	graph = build_interaction_graph(qubo)

	assert graph.vertices == (x(1), x(2), x(3), x(4), y(1), y(2))
	assert set(graph.edges) == {
		(x(1), x(2)),
		(x(1), y(1)),
		(x(2), y(1)),
		(x(3), x(4)),
		(x(3), y(2)),
		(x(4), y(2)),
		(y(1), y(2)),
	}
	assert graph.weight(y(2), y(1)) == 1.0
	assert graph.weight(x(1), y(1)) == -4.0
	assert graph.weight(x(1), x(3)) == 0.0


def test_chain_graph_is_two_triangles_and_a_pendant():
	qubo = quadratize_chain(product(4)).qubo
	graph = build_interaction_graph(qubo)

	assert len(graph.vertices) == 6
	assert len(graph.edges) == 7
	assert graph.degree(x(1)) == 1
	assert graph.neighbors(y(1)) == [x(2), x(3), x(4), y(2)]


def test_linear_polynomial_has_no_edges():
	graph = build_interaction_graph(parse_polynomial('x1 - x2 + 3'))

	assert graph.vertices == (x(1), x(2))
	assert not graph.edges


def test_graph_needs_quadratic_input():
	with pytest.raises(DegreeTooHighError) as info:
		build_interaction_graph(product(3))

	assert info.value.degree == 3


def test_dot_rendering():
	graph = build_interaction_graph(
		parse_polynomial('2 x1 y1 - x1 x2')
	)
	text = to_dot(graph, highlight={(x(1), y(1))})

	assert text.startswith('graph interaction {\n')
	assert '\t"x1" [shape=box];' in text
	assert '\t"y1" [shape=ellipse];' in text
	assert '\t"x1" -- "y1" [label="2" color=red];' in text
	assert '\t"x1" -- "x2" [label="-1"];' in text
	assert text.endswith('}\n')


def test_graph_document():
	graph = build_interaction_graph(parse_polynomial('x2 x1'))

	document = graph.to_document()

	assert document.vertices == ['x1', 'x2']
	assert document.edges == [('x1', 'x2', 1.0)]
