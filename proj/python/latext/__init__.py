from ._latext import (
    complete_to_basis,
    count_basis_extensions,
    count_full_completions,
    count_primitive_extensions,
    count_slice,
    density_ratio,
    dirichlet_approximations,
    enumerate_basis_extensions,
    enumerate_slice,
    farey_approximations,
    farey_neighbors,
    farey_series,
    is_primitive,
    lattice_count_extensions,
    mlform_eval,
    neighbor_count_up_to,
    nu,
    relation_matrix,
    slice_bounds,
    small_solution,
    sparse_search,
    unit_coeff_representation,
    zeta_partial,
)

__all__ = [
    "complete_to_basis",
    "count_basis_extensions",
    "count_full_completions",
    "count_primitive_extensions",
    "count_slice",
    "density_ratio",
    "dirichlet_approximations",
    "enumerate_basis_extensions",
    "enumerate_slice",
    "farey_approximations",
    "farey_neighbors",
    "farey_series",
    "is_primitive",
    "lattice_count_extensions",
    "mlform_eval",
    "neighbor_count_up_to",
    "nu",
    "relation_matrix",
    "slice_bounds",
    "small_solution",
    "sparse_search",
    "unit_coeff_representation",
    "zeta_partial",
]
