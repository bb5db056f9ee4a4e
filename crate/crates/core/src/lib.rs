pub mod cabling;
pub mod cli;
pub mod error;
pub mod gluing;
pub mod graph;
pub mod intervals;
pub mod rationals;
pub mod seifert;

pub use error::{Error, Result};
pub use intervals::{covers_circle, ClosedSet, GluingMatrix, LInterval, OpenArc};
pub use rationals::ExtRat;
