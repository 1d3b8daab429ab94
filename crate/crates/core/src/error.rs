use thiserror::Error;

use crate::game::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("player id {id} out of range 1..={n}")]
    PlayerOutOfRange { id: usize, n: usize },

    #[error("too many players: {0} (at most 32)")]
    TooManyPlayers(usize),

    #[error("coalitions {0} and {1} overlap")]
    Overlap(String, String),

    #[error("coalition must be nonempty")]
    EmptyCoalition,

    #[error("coalition {coalition} has {size} players, at least 2 required")]
    CoalitionTooSmall { coalition: String, size: usize },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid game: {0}")]
    InvalidGame(ValidationReport),

    #[error("majority quota {quota} violates n/2 < k <= n for n = {n}")]
    MajorityQuota { n: usize, quota: usize },

    #[error("oracle size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("parse error: {0}")]
    Parse(String),
}
