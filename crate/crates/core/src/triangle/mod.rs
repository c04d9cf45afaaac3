//! Direct triangle solvers and the randomized listing/detection reductions.

use std::collections::BTreeSet;

use crate::graph::Triangle;

mod ayz;
mod baseline;
mod listing;
mod via_detection;
mod via_listing;

pub use ayz::{ayz_edge_counts, default_theta, AyzCounter};
pub use baseline::{baseline_list, BaselineLister};
pub use listing::{
    inner_listing, inner_listing_traced, main_listing, main_listing_retry, main_listing_traced,
    InnerReport, ListingParams, MainLister, MainReport, DEFAULT_RETRIES,
};
pub use via_detection::{
    list_via_detection, list_via_detection_traced, ViaDetectionLister, ViaDetectionReport,
};
pub use via_listing::{
    detect_via_listing, detect_via_listing_traced, DetectReport, ListingDetector,
    DEFAULT_RESTART_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ListingStatus {
    /// Every triangle of the input was listed.
    Complete,
    /// Stopped at the given capacity; more triangles may exist.
    Truncated(usize),
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListingResult {
    pub triangles: BTreeSet<Triangle>,
    pub status: ListingStatus,
}

impl ListingResult {
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }
}
