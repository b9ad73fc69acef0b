//! Engine configuration: truncation policy knobs, search effort, and the
//! survival window for direct-limit stabilization.

use crate::algebra::TruncatedAlgebra;
use crate::error::{Error, Result};
use crate::ring::RingModel;

/// Seed used when neither `--seed` nor `SOCLE_PROBE_SEED` is given.
pub const DEFAULT_SEED: u64 = 3_200_332_003;

#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Explicit truncation request; otherwise auto-selected per ring.
    pub truncation: Option<usize>,
    /// Hard cap on truncation escalation.
    pub max_truncation: usize,
    /// Random degree-1 forms tried per degree in the reduction search.
    pub attempts: u32,
    /// Extra direct-system stages a socle image must survive to count as
    /// stable (certified survival replaces this in dimension one).
    pub window: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { truncation: None, max_truncation: 256, attempts: 32, window: 3 }
    }
}

/// Run a computation against the truncated model, enlarging the window when
/// it reports exhaustion, up to the configured cap.
pub fn with_escalation<T>(
    model: &RingModel,
    cfg: &EngineConfig,
    minimum: usize,
    f: impl Fn(&TruncatedAlgebra) -> Result<T>,
) -> Result<T> {
    let mut n = crate::algebra::auto_truncation(model, cfg.truncation).max(minimum);
    loop {
        let alg = TruncatedAlgebra::new(model, n.min(cfg.max_truncation))?;
        match f(&alg) {
            Err(Error::WindowExceeded { needed, .. }) => {
                if n >= cfg.max_truncation {
                    return Err(Error::TruncationBudget {
                        requested: needed + 2,
                        cap: cfg.max_truncation,
                    });
                }
                n = (n + n / 2).max(needed + 2).min(cfg.max_truncation);
            }
            other => return other,
        }
    }
}
