//! Shared fixtures for the benchmark targets.

use gsteiner::{generate_instance, GenParams, GstpInstance, DEFAULT_SEED};

/// The first `count` instances of the default desk-scale campaign.
pub fn campaign_instances(count: usize) -> Vec<GstpInstance> {
    let params = GenParams::default_campaign(DEFAULT_SEED);
    (0..count).map(|i| generate_instance(&params, i)).collect()
}

/// A denser, larger instance that stresses the exact solver harder than the
/// campaign defaults.
pub fn dense_instance() -> GstpInstance {
    let params = GenParams::new((12, 12), 0.6, (1, 50), (4, 4), (2, 3), DEFAULT_SEED).unwrap();
    generate_instance(&params, 0)
}
