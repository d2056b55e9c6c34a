"""
Utils for testing the toolkit.
"""
