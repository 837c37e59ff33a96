//! Special matrices, module presentations and the surface recipes.

mod linkage;
mod matrices;
mod pipeline;
mod recipes;
mod registry;

pub use linkage::{
    five_planes, lemma3_2, link_general, meet_point, plane_coefficients, plane_forms_through, prop3_1_linkage, prop3_11,
    CastelnuovoChain, FivePlanes, Lemma32, LinkageChain,
};
pub use matrices::{
    check_extension_class, four_koszul_module, hm_derived_module, hm_gamma, hm_module_with_tau, linear_coefficients,
    moore_matrix, planes_in_general_position, segre_cubic, twisted_cotangent_module, MooreParameters, Plane, DEFAULT_XI,
};
pub use recipes::{bundle_e, plane_kernel, prop2_1, prop2_6, prop3_1_syzygy, PlaneChoice, SyzygySurface};
pub use registry::{
    attempt_seed, expected, ideal_lines, prop3_11_z_table, run_recipe, Check, Expected, RecipeRun, RunOptions, RECIPES,
};
pub use pipeline::{degeneracy_pipeline, ideal_from_module, random_module_element};

#[cfg(test)]
mod tests;
