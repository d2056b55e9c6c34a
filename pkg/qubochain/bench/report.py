"""
This module contains the markdown report of a
benchmark run: an overview, the per-(N, strategy)
means, the depth reduction and the failure list.
"""

import pandas as pd

from qubochain.schemas.bench import BenchSummary


def render_bench_report(
	df: pd.DataFrame,
	summary: BenchSummary,
	*,
	title: str = 'Benchmark Report',
	max_failures: int = 100,
) -> str:
	"""
	Render a markdown report for benchmark records.

	Args:
		df:
			Records, one row per (instance, strategy).
		summary:
			Summary computed from the same records.
		title:
			Top-level title in markdown.
		max_failures:
			Cap number of failures listed.

	Returns:
		A single markdown string.
	"""
	sections: list[str] = [f'# {title}\n']
	sections.append(render_overview_section(df, summary))
	sections.append(render_groups_section(summary))
	sections.append(render_reduction_section(summary))
	sections.append(
		render_failures_section(summary, max_failures=max_failures)
	)

	return (
		'\n'.join(s.strip('\n') + '\n' for s in sections).strip()
		+ '\n'
	)


def render_overview_section(
	df: pd.DataFrame,
	summary: BenchSummary,
) -> str:
	lines: list[str] = ['## Overview\n']
	lines.append(f'- **Records:** {len(df)}')

	if not df.empty:
		sizes = sorted(int(n) for n in df['N'].unique())
		instances = int(df[['N', 'seed']].drop_duplicates().shape[0])
		lines.append(
			f'- **Sizes:** {", ".join(str(n) for n in sizes)}'
		)
		lines.append(f'- **Instances:** {instances}')

	lines.append(
		f'- **Connectivity violations:** '
		f'{summary.connectivity_violations}'
	)
	lines.append(
		f'- **Quadratization oracle failures:** '
		f'{summary.quadratization_failures}'
	)
	lines.append(f'- **Failures:** {len(summary.failures)}')

	for key in ('device', 'seed', 'samples'):
		if key in summary.settings:
			lines.append(
				f'- **{key.capitalize()}:** '
				f'`{summary.settings[key]}`'
			)

	return '\n'.join(lines) + '\n'


def render_groups_section(summary: BenchSummary) -> str:
	lines: list[str] = ['## Means per size and strategy\n']

	if not summary.groups:
		lines.append('- No records.\n')
		return '\n'.join(lines)

	lines.append(
		'| N | Strategy | Samples | Depth | Width '
		'| 2q gates | SWAPs | Aux |'
	)
	lines.append('|---:|---|---:|---:|---:|---:|---:|---:|')
	for g in summary.groups:
		lines.append(
			f'| {g.N} | {g.strategy} | {g.samples} '
			f'| {g.mean_depth:.1f} | {g.mean_width:.1f} '
			f'| {g.mean_two_qubit_count:.1f} '
			f'| {g.mean_swap_count:.1f} '
			f'| {g.mean_aux_count:.1f} |'
		)

	return '\n'.join(lines) + '\n'


def render_reduction_section(summary: BenchSummary) -> str:
	lines: list[str] = ['## Depth reduction\n']

	if not summary.depth_reduction:
		lines.append('- No paired records.\n')
	else:
		lines.append('| N | Chain vs baseline | Control depth |')
		lines.append('|---:|---:|---:|')
		for n, value in sorted(summary.depth_reduction.items()):
			control = summary.control_cost_depth.get(n, '-')
			lines.append(
				f'| {n} | {value * 100:.1f}% | {control} |'
			)
		if summary.mean_depth_reduction is not None:
			lines.append(
				f'\n- **Mean reduction:** '
				f'{summary.mean_depth_reduction * 100:.1f}%'
			)

	return '\n'.join(lines) + '\n'


def render_failures_section(
	summary: BenchSummary,
	*,
	max_failures: int = 100,
) -> str:
	lines: list[str] = ['## Failures\n']

	if not summary.failures:
		lines.append('- No failures.\n')
		return '\n'.join(lines)

	lines.append('| N | Seed | Strategy | Error | Message |')
	lines.append('|---:|---:|---|---|---|')
	for f in summary.failures[:max_failures]:
		message = f.message.replace('|', '\\|')
		lines.append(
			f'| {f.N} | {f.seed} | {f.strategy} '
			f'| `{f.error}` | {message} |'
		)

	remaining = len(summary.failures) - max_failures
	if remaining > 0:
		lines.append(f'\n- ... and {remaining} more')

	return '\n'.join(lines) + '\n'
