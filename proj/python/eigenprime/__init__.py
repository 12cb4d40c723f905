"""Exact prime and coprime triple counts on the surface z0^2 - z1^2 + z2^2 - z0 z2 = 0."""

from ._core import (
    CapacityError,
    DomainError,
    Tables,
    classify,
    constants,
    count_all,
    count_coprime_box_modp,
    count_region,
    density_sample,
    dihedral_char_poly,
    enumerate_solutions,
    in_omega,
    is_prime,
    on_surface,
    phi_map,
    plane_counts,
    q_value,
    required_table_limit,
    run_cli,
    surface_sandwich,
    triangle_area,
    zeta,
)

__all__ = [
    "CapacityError",
    "DomainError",
    "Tables",
    "classify",
    "constants",
    "count_all",
    "count_coprime_box_modp",
    "count_region",
    "density_sample",
    "dihedral_char_poly",
    "enumerate_solutions",
    "in_omega",
    "is_prime",
    "on_surface",
    "phi_map",
    "plane_counts",
    "q_value",
    "required_table_limit",
    "run_cli",
    "surface_sandwich",
    "triangle_area",
    "zeta",
]
