//! Polynomial presentations of the 3-loop Jacobi diagram spaces.

mod catalog;
mod coords;
mod series;
mod slice;

pub use catalog::{catalog, DegreeInfo, GraphId, InternalGraph, Parity};
pub use coords::{
    congruent_mod_sum, eliminate_y4, reduced_y, scaled_x_at, x_from_y, x_from_y_all, y_from_x,
    y_images,
};
pub use series::{even_closed_form, hilbert_coefficients, odd_target_dim};
pub use slice::{
    delta_sigma3_cofactor, eq8_span_in, eq8_span_slice, family_slice_expanded, family_slice_in,
    psi4_image_in, psi4_image_slice, tet_slice, tet_slice_all_monomials, tsq_odd_dim, Family,
    Generator, SliceSpace,
};
