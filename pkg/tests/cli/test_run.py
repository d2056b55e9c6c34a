"""
This module is used to test the command line entry
point end to end, from polynomial text to reports.
"""

import json
import re

import pandas as pd
import pytest

from qubochain.quadratizer.problem import QuadratizedProblem
from qubochain.run import (
	EXIT_CHECK_FAILED,
	EXIT_ERROR,
	EXIT_OK,
	main,
)
from tests.utils.files import delete_dir, results_path

# --- Test Constants ---

OUTPUT_DIR = results_path('cli')
PRODUCT_4 = 'x1 x2 x3 x4'
PRODUCT_6 = 'x1 x2 x3 x4 x5 x6'
# Minimum of the QUBO drops below the original one
# when the penalty is this small.
WEAK_PENALTY = '-10 x1 x2 x3 + 10 x2 + 10 x3'

# --- Test cases ---


@pytest.fixture(scope='module', autouse=True)
def output_dir():
	OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
	yield OUTPUT_DIR
	delete_dir(OUTPUT_DIR)


def test_quadratize_to_stdout(capsys):
	code = main(['quadratize', '--expr', PRODUCT_4])

	assert code == EXIT_OK
	problem = QuadratizedProblem.from_json(capsys.readouterr().out)
	assert problem.aux_count == 2
	assert problem.penalty_factor == 2
	assert problem.qubo.degree == 2


def test_quadratize_from_file():
	source = OUTPUT_DIR / 'product.txt'
	source.write_text(PRODUCT_4, encoding='utf-8')
	out = OUTPUT_DIR / 'product_baseline.json'

	code = main(
		[
			'quadratize',
			str(source),
			'--strategy',
			'baseline',
			'--out',
			str(out),
		]
	)

	assert code == EXIT_OK
	problem = QuadratizedProblem.from_json(out.read_bytes())
	assert problem.strategy == 'baseline'
	assert problem.aux_count == 2


def test_unseeded_random_tie_break_is_replayable(capsys):
	args = [
		'quadratize',
		'--expr',
		PRODUCT_6,
		'--tie-break',
		'random',
	]

	assert main(args) == EXIT_OK
	first = capsys.readouterr()
	seeds = re.findall(r'seed=(\d+)', first.err)
	assert len(seeds) == 1

	assert main([*args, '--seed', seeds[0]]) == EXIT_OK
	second = capsys.readouterr()
	assert f'seed={seeds[0]}' in second.err
	assert json.loads(second.out) == json.loads(first.out)


def test_graph_chains_of_problem(capsys):
	problem_file = OUTPUT_DIR / 'graph_problem.json'
	main(
		[
			'quadratize',
			'--expr',
			PRODUCT_4,
			'--out',
			str(problem_file),
		]
	)
	dot_file = OUTPUT_DIR / 'graph.dot'

	code = main(
		[
			'graph',
			'--problem',
			str(problem_file),
			'--chains',
			'--dot',
			str(dot_file),
		]
	)

	assert code == EXIT_OK
	document = json.loads(capsys.readouterr().out)
	assert len(document['chains']) == 1
	assert document['chains'][0]['path'] == [
		'x3',
		'x4',
		'y1',
		'x2',
		'y2',
		'x1',
	]
	assert document['extraneous_edges'] == []
	assert document['relations'] == {}
	assert dot_file.read_text(encoding='utf-8').startswith('graph')


def test_device_path(capsys):
	code = main(['device', 'path'])

	assert code == EXIT_OK
	document = json.loads(capsys.readouterr().out)
	assert document['device'] == 'ibm_torino'
	assert document['length'] == 112
	assert document['path'][0] == 14
	assert len(set(document['path'])) == 112


def test_compile_metrics(capsys):
	code = main(
		[
			'compile',
			'--expr',
			PRODUCT_4,
			'--emit',
			'metrics',
		]
	)

	assert code == EXIT_OK
	metrics = json.loads(capsys.readouterr().out)
	assert metrics['width'] == 6
	assert metrics['depth'] > 0


def test_compile_then_verify(capsys):
	original = OUTPUT_DIR / 'product6.txt'
	original.write_text(PRODUCT_6, encoding='utf-8')
	problem_file = OUTPUT_DIR / 'product6_problem.json'
	layer_file = OUTPUT_DIR / 'product6_layer.json'
	report_file = OUTPUT_DIR / 'product6_report.json'

	# Step 1: compile and keep the native cost layer
	code = main(
		[
			'compile',
			str(original),
			'--gamma',
			'0.3',
			'--emit',
			'cost-json',
			'--problem-out',
			str(problem_file),
			'--out',
			str(layer_file),
		]
	)
	assert code == EXIT_OK

	# Step 2: run every oracle on the pieces
	code = main(
		[
			'verify',
			'--original',
			str(original),
			'--problem',
			str(problem_file),
			'--circuit',
			str(layer_file),
			'--gamma',
			'0.3',
			'--device',
			'builtin:ibm_torino',
			'--out',
			str(report_file),
		]
	)

	assert code == EXIT_OK
	report = json.loads(report_file.read_text(encoding='utf-8'))
	assert report['passed']
	assert report['phase_ok']
	assert report['connectivity_ok']
	assert report['permutation_ok']


def test_verify_detects_weak_penalty(capsys):
	original = OUTPUT_DIR / 'weak.txt'
	original.write_text(WEAK_PENALTY, encoding='utf-8')
	problem_file = OUTPUT_DIR / 'weak_problem.json'
	main(
		[
			'quadratize',
			str(original),
			'--penalty-factor',
			'0.01',
			'--out',
			str(problem_file),
		]
	)

	code = main(
		[
			'verify',
			'--original',
			str(original),
			'--problem',
			str(problem_file),
		]
	)

	assert code == EXIT_CHECK_FAILED
	report = json.loads(capsys.readouterr().out)
	assert not report['passed']
	assert report['phase_ok'] is None


def test_bench_outputs():
	csv_file = OUTPUT_DIR / 'bench.csv'
	summary_file = OUTPUT_DIR / 'bench_summary.json'
	report_file = OUTPUT_DIR / 'bench_report.md'

	code = main(
		[
			'bench',
			'--sizes',
			'6',
			'--samples',
			'1',
			'--omit-timing',
			'--out',
			str(csv_file),
			'--summary-json',
			str(summary_file),
			'--report-md',
			str(report_file),
		]
	)

	assert code == EXIT_OK
	df = pd.read_csv(csv_file)
	assert len(df) == 2
	assert sorted(df['strategy']) == ['baseline', 'chain']
	summary = json.loads(summary_file.read_text(encoding='utf-8'))
	assert summary['control_cost_depth'] == {'6': 23}
	report = report_file.read_text(encoding='utf-8')
	assert report.startswith('# Benchmark Report')
	assert '- No failures.' in report


def test_errors_exit_with_code_two(capsys):
	test_cases = [
		# Nothing to read
		['quadratize'],
		# Unknown variable name
		['quadratize', '--expr', 'x1 z2'],
		# Missing file
		['quadratize', str(OUTPUT_DIR / 'missing.txt')],
		# Unknown device
		['device', 'path', '--device', 'nowhere:3'],
		# Chain longer than the device path
		['compile', '--expr', PRODUCT_6, '--device', 'line:3'],
	]

	for argv in test_cases:
		assert main(argv) == EXIT_ERROR
	capsys.readouterr()
