//! Exact coopetition, decisiveness and classical power indices for simple
//! monotone games.
//!
//! Games are built once and never mutated; every index is a pure function
//! returning an exact [`Rational`].
//!
//! ```
//! use coopetition::{Coalition, Model, SimpleGame};
//!
//! let game = SimpleGame::from_mwc_ids(5, &[&[1, 2, 3, 4], &[1, 4, 5]]).unwrap();
//! let s = Coalition::from_ids([1, 2, 3, 4]).unwrap();
//! let c = coopetition::model_coopetition(&game, s, Model::ShapleyOwen).unwrap();
//! assert_eq!(coopetition::render(&c), "7/9");
//! ```

pub mod coalition;
pub mod coopetition;
pub mod decisiveness;
pub mod distribution;
pub mod error;
pub mod file;
pub mod game;
pub mod oracles;
pub mod power;
pub mod rational;
pub mod report;
pub mod tables;

pub use crate::coalition::{Coalition, PlayerId, MAX_PLAYERS};
pub use crate::coopetition::{
    attitude, banzhaf_attitude, banzhaf_coopetition, block_interaction, coopetition,
    model_coopetition, shapley_owen_attitude, shapley_owen_coopetition,
};
pub use crate::decisiveness::{
    block_competition, block_cooperation, competitive_index, cooperative_index, decisiveness,
    index_bundle, model_bundle, IndexBundle,
};
pub use crate::distribution::{
    partitions2, Model, OutsideDistribution, Partition2, PartitionDistribution,
};
pub use crate::error::{Error, Result};
pub use crate::file::{GameFile, GameKind};
pub use crate::game::{Representation, SimpleGame, ValidationOptions, ValidationReport, Violation};
pub use crate::power::{
    generalized_shapley, interaction_indicator, profitability, shapley_interaction,
};
pub use crate::rational::{parse_rational, render, Rational};
pub use crate::report::{
    compute_index, render_rows, sweep, Format, IndexKind, OutputRow, SweepSpec,
};
pub use crate::tables::{paper_table, TableId, TableReport};
