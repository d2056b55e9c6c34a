"""
This module contains the resolution of device
specifiers used on the command line:

- `builtin:ibm_torino`
- `heavy-hex:R,C`
- `line:N` and `complete:N`
- `file:<path>`
"""

from functools import lru_cache
from pathlib import Path

from qubochain.device.topology import (
	CouplingMap,
	complete_map,
	heavy_hex,
	line_map,
	load_coupling_map,
)
from qubochain.exceptions.device import UnknownDeviceError
from qubochain.static.paths import Paths
from qubochain.utils.files import read_bytes

BUILTIN_DEVICES = {
	'ibm_torino': 'ibm_torino.json',
}


def load_builtin(name: str) -> CouplingMap:
	if name not in BUILTIN_DEVICES:
		raise UnknownDeviceError(
			f'No built-in device named {name!r}',
			specifier=f'builtin:{name}',
		)
	path = Paths.DEVICES_DIR / BUILTIN_DEVICES[name]
	return load_coupling_map(read_bytes(path))


def _size(specifier: str, value: str) -> int:
	try:
		return int(value)
	except ValueError as e:
		raise UnknownDeviceError(
			'Device size must be an integer',
			specifier=specifier,
		) from e


@lru_cache(maxsize=16)
def resolve_device(specifier: str) -> CouplingMap:
	"""
	Coupling map named by a device specifier.
	Results are cached per process.

	Raises:
		UnknownDeviceError: unknown scheme or name.
	"""
	scheme, _, value = specifier.partition(':')

	match scheme:
		case 'builtin':
			return load_builtin(value)
		case 'heavy-hex':
			rows, _, cols = value.partition(',')
			return heavy_hex(
				_size(specifier, rows),
				_size(specifier, cols),
			)
		case 'line':
			return line_map(_size(specifier, value))
		case 'complete':
			return complete_map(_size(specifier, value))
		case 'file':
			path = Path(value)
			if not path.is_file():
				raise UnknownDeviceError(
					f'Coupling map file {path} not found',
					specifier=specifier,
				)
			return load_coupling_map(read_bytes(path))
		case _:
			raise UnknownDeviceError(
				f'Unknown device scheme {scheme!r}',
				specifier=specifier,
			)
