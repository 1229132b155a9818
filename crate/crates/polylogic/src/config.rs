//! Run-wide knobs shared by the library and the command-line tool.

/// Tuning parameters for operations that enumerate, sample or cap work.
///
/// One seeded generator drives every randomized step (point sampling in the
/// realization verifier), so a fixed `seed` makes whole runs reproducible.
#[derive(Clone, Debug)]
pub struct Config {
    /// Seed for all pseudo-random sampling.
    pub seed: u64,
    /// Maximum number of upsets the upset-algebra constructor will enumerate.
    pub carrier_cap: usize,
    /// Number of support points sampled by the realization verifier.
    pub samples: usize,
    /// Fractional digits emitted by the approximate OFF export.
    pub off_precision: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0x706f6c79,
            carrier_cap: 1 << 20,
            samples: 100,
            off_precision: 6,
        }
    }
}
