//! Resource budgets for the exact solvers.
//!
//! Branch-and-bound on independent sets, colorings, and dominating sets is
//! exponential in the worst case.  Every search loop charges nodes against a
//! [`Budget`] so callers get a clean error instead of a hung process.

use std::time::Instant;

/// A search exceeded its node or wall-clock allowance.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResourceError {
    #[error("search exceeded the node budget of {limit} nodes")]
    NodeBudget { limit: u64 },
    #[error("search exceeded the time budget of {seconds} seconds")]
    TimeBudget { seconds: u64 },
}

/// Node-count and optional wall-clock limits shared across a search.
///
/// `tick` is called once per search node; it fails once either limit is
/// crossed.  The deadline is checked only every 1024 nodes to keep the
/// common path cheap.
#[derive(Debug, Clone)]
pub struct Budget {
    nodes_used: u64,
    node_limit: u64,
    started: Instant,
    time_limit_secs: Option<u64>,
}

impl Budget {
    /// Effectively unlimited; for small inputs and unit tests.
    pub fn unlimited() -> Self {
        Budget::new(u64::MAX, None)
    }

    pub fn new(node_limit: u64, time_limit_secs: Option<u64>) -> Self {
        Budget {
            nodes_used: 0,
            node_limit,
            started: Instant::now(),
            time_limit_secs,
        }
    }

    /// Charge one search node.
    pub fn tick(&mut self) -> Result<(), ResourceError> {
        self.nodes_used += 1;
        if self.nodes_used > self.node_limit {
            return Err(ResourceError::NodeBudget {
                limit: self.node_limit,
            });
        }
        if self.nodes_used % 1024 == 0 {
            if let Some(secs) = self.time_limit_secs {
                if self.started.elapsed().as_secs() >= secs {
                    return Err(ResourceError::TimeBudget { seconds: secs });
                }
            }
        }
        Ok(())
    }

    pub fn nodes_used(&self) -> u64 {
        self.nodes_used
    }
}
