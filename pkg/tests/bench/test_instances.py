"""
This module is used to test the random instance
generator.
"""

import pytest

from qubochain.bench.harness import instance_seed
from qubochain.bench.instances import (
	MIN_ABS_COEF,
	InstanceConfig,
	generate_instance,
	product_instance,
)
from qubochain.exceptions.bench import InvalidInstanceConfigError
from qubochain.quadratizer.baseline import quadratize_baseline
from tests.utils.builders import product

# --- Test cases ---


def test_generation_is_deterministic():
	cfg = InstanceConfig(num_vars=10, seed=42)

	assert generate_instance(cfg) == generate_instance(cfg)
	assert generate_instance(cfg) != generate_instance(
		InstanceConfig(num_vars=10, seed=43)
	)


def test_terms_within_bounds():
	for seed in range(20):
		cfg = InstanceConfig(
			num_vars=8,
			num_terms=8,
			max_term_degree=5,
			seed=seed,
		)
		poly = generate_instance(cfg)

		assert 1 <= len(poly) <= 8
		for key, coef in poly.terms.items():
			assert 2 <= len(key) <= 5
			assert all(1 <= v.index <= 8 for v in key)
			# Merged terms may add up past a single draw
			if len(poly) == 8:
				assert MIN_ABS_COEF <= abs(coef) <= 10


def test_defaults():
	cfg = InstanceConfig(num_vars=4, seed=0)

	assert cfg.terms == 4
	assert cfg.max_degree == 4
	assert InstanceConfig(num_vars=9, seed=0).max_degree == 6


def test_quadratic_instances_need_no_auxiliaries():
	cfg = InstanceConfig(num_vars=8, max_term_degree=2, seed=5)
	poly = generate_instance(cfg)

	assert poly.degree == 2
	assert quadratize_baseline(poly).substitutions == ()


def test_invalid_configs():
	test_cases = [
		{'num_vars': 1, 'seed': 0},
		{'num_vars': 8, 'seed': -1},
		{'num_vars': 8, 'seed': 0, 'coef_range': (5, 1)},
		{'num_vars': 8, 'seed': 0, 'max_term_degree': 1},
	]

	for values in test_cases:
		with pytest.raises(InvalidInstanceConfigError):
			InstanceConfig.build(**values)


def test_coefficient_range_without_admissible_values():
	cfg = InstanceConfig(num_vars=8, seed=0, coef_range=(-0.2, 0.2))

	with pytest.raises(InvalidInstanceConfigError):
		generate_instance(cfg)


def test_instance_seeds():
	assert instance_seed(0, 8, 0) == instance_seed(0, 8, 0)
	assert instance_seed(0, 8, 0) != instance_seed(0, 8, 1)
	assert 0 <= instance_seed(7, 16, 3) < 2**64


def test_product_instance():
	assert product_instance(6) == product(6)
