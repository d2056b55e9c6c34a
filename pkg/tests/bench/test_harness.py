"""
This module is used to test the benchmark harness, its
CSV output and the summary statistics.
"""

import pytest

from qubochain.bench.harness import (
	BenchSettings,
	records_to_csv,
	run_benchmark,
	write_csv,
)
from qubochain.bench.report import render_bench_report
from qubochain.schemas.bench import CSV_COLUMNS
from tests.utils.files import delete_file, results_path

# --- Test Constants ---

SETTINGS = BenchSettings(sizes=(6, 7), samples=2, omit_timing=True)
OUTPUT_FILE = results_path('test_harness.csv')
SWEEP = BenchSettings(
	sizes=tuple(range(8, 17)),
	samples=25,
	omit_timing=True,
)
LARGE = BenchSettings(sizes=(16,), samples=100, omit_timing=True)
MIN_DEPTH_REDUCTION = 0.2

# --- Test cases ---


@pytest.fixture(scope='module')
def result():
	return run_benchmark(SETTINGS)


def test_one_record_per_instance_and_strategy(result):
	records = result.records

	assert len(records) == 2 * 2 * 2
	assert [(r.N, r.seed, r.strategy) for r in records] == sorted(
		(r.N, r.seed, r.strategy) for r in records
	)
	assert not result.summary.failures


def test_csv_layout(result):
	lines = records_to_csv(result.records, SETTINGS).splitlines()

	assert lines[0] == '# generator=numpy.random.PCG64 seed=0'
	assert lines[1] == (
		'# sizes=6,7 samples=2 device=builtin:ibm_torino '
		'terms=auto max_degree=auto coef_range=-10,10'
	)
	assert lines[2] == ','.join(CSV_COLUMNS)
	assert len(lines) == 3 + len(result.records)
	assert all(line.endswith(',0.0') for line in lines[3:])


def test_runs_are_reproducible(result):
	again = run_benchmark(SETTINGS)

	assert records_to_csv(again.records, SETTINGS) == (
		records_to_csv(result.records, SETTINGS)
	)


def test_circuits_are_compliant(result):
	summary = result.summary

	assert summary.connectivity_violations == 0
	assert summary.quadratization_failures == 0
	assert summary.control_cost_depth == {6: 23, 7: 23}


def test_summary_matches_records(result):
	frame = result.frame()

	for group in result.summary.groups:
		rows = frame[
			(frame['N'] == group.N)
			& (frame['strategy'] == group.strategy)
		]
		assert group.samples == len(rows) == 2
		assert group.mean_depth == pytest.approx(rows['depth'].mean())
		assert group.mean_width == pytest.approx(rows['width'].mean())

	assert set(result.summary.depth_reduction) == {6, 7}
	assert result.summary.mean_depth_reduction is not None


def test_failures_do_not_stop_the_run():
	settings = BenchSettings(sizes=(8,), samples=1, device='line:3')

	result = run_benchmark(settings)

	assert result.records == []
	errors = {f.error for f in result.summary.failures}
	assert errors == {'CapacityExceededError'}
	# Both strategies plus the product control
	assert len(result.summary.failures) == 3


def test_write_csv_and_report(result):
	write_csv(result.records, SETTINGS, OUTPUT_FILE)

	text = OUTPUT_FILE.read_text(encoding='utf-8')
	assert text == records_to_csv(result.records, SETTINGS)

	report = render_bench_report(result.frame(), result.summary)
	assert report.startswith('# Benchmark Report\n')
	assert '## Depth reduction' in report
	assert '- No failures.' in report

	delete_file(OUTPUT_FILE)


@pytest.mark.slow
def test_full_sweep_is_compliant():
	summary = run_benchmark(SWEEP).summary

	assert not summary.failures
	assert summary.connectivity_violations == 0
	assert summary.quadratization_failures == 0
	assert summary.control_cost_depth == {
		n: 23 for n in SWEEP.sizes
	}
	assert {g.samples for g in summary.groups} == {25}


@pytest.mark.slow
def test_chain_trades_width_for_depth():
	summary = run_benchmark(LARGE).summary
	means = {g.strategy: g for g in summary.groups}

	chain, baseline = means['chain'], means['baseline']
	assert chain.samples == baseline.samples == 100
	# Mean native depth drops by at least a fifth
	assert chain.mean_depth <= (
		(1 - MIN_DEPTH_REDUCTION) * baseline.mean_depth
	)
	# Longer chains on the path occupy more qubits
	assert chain.mean_width > baseline.mean_width
	assert summary.connectivity_violations == 0
