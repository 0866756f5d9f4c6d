//! Hyperplane covering bounds and the Snevily permutation search.

pub mod covering;
pub mod snevily;

pub use covering::{
    check_cube_cover, check_mult_cover, coverage_count, covering_certificate, cube_vertices,
    full_pool, required_coverage, search_min_cover, sweep_mult_covers, CoverInstance,
    CoverSearchReport, CoveringCertificate, CubeCoverReport, Hyperplane, MultCoverReport,
    MultCoverSweep,
};
pub use snevily::{check_snevily_fp, is_snevily_permutation, snevily_sweep, SnevilySweep};
