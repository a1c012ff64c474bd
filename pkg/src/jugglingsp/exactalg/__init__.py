"""Exact rational linear algebra for points, forms and group actions."""
from .degeneration import degeneration_path, move_signs, path_endpoints, path_point, path_point_inverse
from .lie import (
    EndoTuple,
    aut_equation_residual,
    build_aut_from_tuple,
    check_aut_equations,
    exp_nilpotent,
    first_columns,
    isotropic_tangent_dimension,
    lie_basis,
    lie_dimension,
    orbit_dimension,
    orbit_rank,
    random_group_element,
    random_orbit_point,
    random_torus_element,
    sigma_G,
    sigma_g,
    symplectic_lie_indices,
    tangent_vectors,
    x_basis_element,
    y_basis_element,
    y_entries,
)
from .quiver import (
    QuiverPoint,
    coordinate_point,
    form_sign,
    isotropy_check,
    maximal_cell_point_rank1,
    omega,
    sigma_point,
    tau1,
    tau1z,
)
from .rational import RationalMatrix

