"""
Multilinear pseudo-Boolean polynomials over binary
variables: representation, arithmetic, penalty terms
and the text/JSON interchange formats.
"""
