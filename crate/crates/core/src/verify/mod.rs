//! Numerical checks around the fan: the explicit lower bound, the
//! exhaustive scan over triangulations, and the local moves.

mod bounds;
mod scan;
mod transform;

pub use bounds::{
    asymptotic_table, check_fan_bound, fan_lower_bound, ratios_nondecreasing, BoundReport, BOUND_SLACK,
};
pub use scan::{
    extremal_scan, extremal_scan_bounded, ScanRecord, ScanReport, DEFAULT_MAX_N, GAP_THRESHOLD,
    TIE_TOLERANCE, VIOLATION_SLACK,
};
pub use transform::{entry_swap_check, flip_transform, leaf_reattach, Reembedding};
