//! Seeded inputs shared by the criterion benches.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use t3embed::sampling::{random_embeddable_map, random_map};
use t3embed::{SurfaceModel, TorusMap};

pub const SEED: u64 = 0x7e3_bead;

pub fn surfaces() -> Vec<(String, SurfaceModel)> {
    let mut out = Vec::new();
    for g in [1u32, 4, 16] {
        out.push((format!("o{g}"), SurfaceModel::orientable(g)));
    }
    for h in [4u32, 10, 32] {
        out.push((format!("n{h}"), SurfaceModel::nonorientable(h).unwrap()));
    }
    out
}

pub fn random_maps(surface: &SurfaceModel, count: usize, bound: i64) -> Vec<TorusMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count).map(|_| random_map(&mut rng, surface, bound)).collect()
}

/// Embeddable maps whose witness needs the full reduction.
pub fn embeddable_maps(surface: &SurfaceModel, count: usize, bound: i64) -> Vec<TorusMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count)
        .map(|_| random_embeddable_map(&mut rng, surface, bound).expect("surface admits embeddings"))
        .collect()
}
