"""
Reduction of higher-order polynomials to QUBO form,
either with the pair-frequency baseline or with the
hardware-aware chain-of-triangles greedy.
"""
