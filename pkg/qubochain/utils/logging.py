"""
This module contains utility functions
for logging within the toolkit, primarily
around configuring the root logger once in
the CLI entry point so every stage logs in
the same format.
"""

import logging
import os
import traceback
from pathlib import Path

from pythonjsonlogger.json import JsonFormatter

LOG_FORMAT = (
	'%(asctime)s | %(levelname)s | %(name)s | '
	'%(stage)s | %(message)s'
)


class SafeFormatter(logging.Formatter):
	"""
	Log formatter that ensures optional fields
	are always present on the LogRecord.
	"""

	def format(self, record: logging.LogRecord) -> str:
		if not hasattr(record, 'stage'):
			record.stage = '-'
		return super().format(record)


class SafeJsonFormatter(JsonFormatter):
	"""JSON counterpart of `SafeFormatter`."""

	def format(self, record: logging.LogRecord) -> str:
		if not hasattr(record, 'stage'):
			record.stage = '-'
		return super().format(record)


def level_from_env(
	default: int = logging.INFO,
) -> int:
	"""
	Resolve the log level from the
	`QUBOCHAIN_LOG_LEVEL` environment variable.
	Unknown names fall back to the default.
	"""
	name = os.environ.get('QUBOCHAIN_LOG_LEVEL')
	if not name:
		return default

	level = logging.getLevelName(name.upper())
	return level if isinstance(level, int) else default


# Use once in the main entry point of the
# application to configure logging
def setup_logging(
	log_file: Path,
	*,
	level: int = logging.INFO,
	json_file: bool = False,
) -> None:
	"""
	Configure global logging.

	- Writes logs to file and stderr
	- Ensures log directory exists
	- Adds safe handling for custom fields
	- Optionally writes the file log as JSON lines
	"""
	log_file.parent.mkdir(
		parents=True,
		exist_ok=True,
	)

	formatter = SafeFormatter(LOG_FORMAT)

	file_handler = logging.FileHandler(
		log_file,
		encoding='utf-8',
	)
	if json_file:
		file_handler.setFormatter(
			SafeJsonFormatter(
				'%(asctime)s %(levelname)s %(name)s '
				'%(stage)s %(message)s'
			)
		)
	else:
		file_handler.setFormatter(formatter)

	stream_handler = logging.StreamHandler()
	stream_handler.setFormatter(formatter)

	root = logging.getLogger()
	root.setLevel(level)

	# Avoid duplicate handlers if setup is called twice
	root.handlers.clear()

	root.addHandler(file_handler)
	root.addHandler(stream_handler)


def stage(name: str) -> dict[str, str]:
	"""
	Helper to build the `extra` mapping tagging a
	log record with its pipeline stage.
	"""
	return {'stage': name}


def format_exception(e: BaseException) -> str:
	"""
	Formats exception details into a string
	for logging error information in detail.

	Args:
	e (BaseException): The exception to format.

	Returns:
	str: A formatted string containing exception
		details.
	"""
	lines: list[str] = []
	lines.append(f'type={type(e)!r}')
	lines.append(f'repr={e!r}')

	cause = getattr(e, '__cause__', None)
	ctx = getattr(e, '__context__', None)

	if cause is not None:
		lines.append(f'cause_type={type(cause)!r}')
		lines.append(f'cause_repr={cause!r}')

	if ctx is not None:
		lines.append(f'context_type={type(ctx)!r}')
		lines.append(f'context_repr={ctx!r}')

	lines.append('traceback:')
	lines.append(traceback.format_exc())
	return '\n'.join(lines)
