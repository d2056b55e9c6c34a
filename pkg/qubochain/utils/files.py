"""
This module contains the file helpers shared by the
CLI, the device loader and the benchmark writer.
"""

import logging
from pathlib import Path

logger = logging.getLogger(__name__)


def read_bytes(path: Path) -> bytes:
	"""
	Raw contents of an input file: polynomial text or
	JSON, coupling maps and circuits.

	Raises:
		FileNotFoundError: `path` is not a file.
	"""
	if not path.is_file():
		raise FileNotFoundError(f'No input file at {path}')
	return path.read_bytes()


def write_file(
	path: Path,
	content: str | bytes,
	*,
	mkdir: bool = True,
) -> None:
	"""
	Write an output document through a sibling
	temporary file, so readers never see half a CSV
	or circuit.

	- Creates parent directories by default
	- Overwrites existing files
	"""
	if mkdir:
		path.parent.mkdir(
			parents=True,
			exist_ok=True,
		)

	data = (
		content
		if isinstance(content, bytes)
		else content.encode('utf-8')
	)
	partial = path.with_name(f'.{path.name}.partial')
	partial.write_bytes(data)
	partial.replace(path)
	logger.debug(f'[FILES] {len(data)} bytes to {path}')
