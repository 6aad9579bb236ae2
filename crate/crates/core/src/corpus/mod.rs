//! Named example groups with their expected facts, and the sweep harness
//! that runs the checks over a list of small groups.

mod examples;
mod sweep;

pub use examples::{build_example, verify_fact, ExampleId, ExpectedFact, Fact, NamedExample, Source};
pub use sweep::{
    enumerate_factorisations, run_sweep, FactorisationFilter, GroupStatus, GroupSummary, Predicate, SweepConfig,
    SweepRecord, SweepSummary, SweepTotals, Tally,
};
