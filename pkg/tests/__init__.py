"""
Testing resources for the qubochain toolkit.
"""
