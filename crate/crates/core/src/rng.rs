//! Deterministic random streams.
//!
//! Every stream is a ChaCha8 generator keyed by the run seed with a distinct
//! 64-bit stream id, so matches and sweep cells draw from non-overlapping
//! keystreams regardless of execution order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

pub fn stream(seed: u64, stream_id: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id);
    rng
}

/// Stream for the `ordinal`-th match of a run.
pub fn match_stream(seed: u64, ordinal: u64) -> StreamRng {
    stream(seed, ordinal)
}

/// Stream for grid cell `(row, col)` of a sweep.
pub fn cell_stream(seed: u64, row: usize, col: usize) -> StreamRng {
    stream(seed, (1 << 63) | ((row as u64) << 32) | col as u64)
}
