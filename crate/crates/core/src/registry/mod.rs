//! Claims registry: a JSON manifest of integer assertions, each with a recipe
//! that recomputes it from the library, and a runner that reports on them.

mod manifest;
mod recipe;
mod report;

pub use manifest::{Claim, Manifest, StatusOverride};
pub use recipe::{evaluate, Arg, Recipe, Value, KNOWN_OPS};
pub use report::{emit, run_claims, Format, Record, Report, Status, Summary};
