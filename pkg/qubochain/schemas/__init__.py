"""
Schema package for the toolkit. This package contains
pydantic models describing every document the CLI reads
or writes: polynomials, quadratized problems, circuits,
coupling maps, benchmark records and reports.
"""
