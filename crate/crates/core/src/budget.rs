use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Wall-clock allowance for the exhaustive searches.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    start: Instant,
    limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { start: Instant::now(), limit: None }
    }

    pub fn new(limit: Duration) -> Self {
        Budget { start: Instant::now(), limit: Some(limit) }
    }

    pub fn from_secs(secs: Option<f64>) -> Self {
        match secs {
            Some(s) => Budget::new(Duration::from_secs_f64(s.max(0.0))),
            None => Budget::unlimited(),
        }
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    pub fn check(&self) -> Result<()> {
        match self.limit {
            Some(limit) if self.start.elapsed() > limit => Err(Error::BudgetExceeded(limit)),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
