"""
Hardware-aware quadratization of higher-order binary
optimization problems and constant-depth QAOA
compilation for heavy-hex devices.
"""
