"""Tests for arrangement_lattice."""
