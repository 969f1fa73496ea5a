"""Exact integer lattice algebra: Smith form, kernels, inertia, discriminant groups."""

from arrangement_lattice.lattice.groups import AbelianGroup, is_subquotient
from arrangement_lattice.lattice.inertia import inertia, inertia_with_nullity
from arrangement_lattice.lattice.invariants import (
    LatticeInvariants,
    compute_invariants,
    discriminant_group,
    exact_determinant,
    exact_rank,
)
from arrangement_lattice.lattice.kernel import KernelSaturation, kernel_saturation, quotient_gram, rational_kernel
from arrangement_lattice.lattice.snf import SmithForm, invariant_factors, smith_normal_form

__all__ = [
    "AbelianGroup",
    "KernelSaturation",
    "LatticeInvariants",
    "SmithForm",
    "compute_invariants",
    "discriminant_group",
    "exact_determinant",
    "exact_rank",
    "inertia",
    "inertia_with_nullity",
    "invariant_factors",
    "is_subquotient",
    "kernel_saturation",
    "quotient_gram",
    "rational_kernel",
    "smith_normal_form",
]
