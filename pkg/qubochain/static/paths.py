import os
from pathlib import Path


class Paths:
	"""
	Class to manage file paths for the toolkit.
	This class contains static references to the
	directories holding device presets, benchmark
	results and logs.
	"""

	PROJECT_ROOT = Path(__file__).resolve().parents[2]

	# Data directories
	DATA_DIR = PROJECT_ROOT / 'data'
	DEVICES_DIR = DATA_DIR / 'devices'

	# Benchmark output, overridable for test runs
	RESULTS_DIR = PROJECT_ROOT / os.environ.get(
		'QUBOCHAIN_RESULTS_DIR',
		'data/results',
	)

	# Temporary directory
	TEMP_DIR = DATA_DIR / 'tmp'
	LOGS_DIR = TEMP_DIR / 'logs'
