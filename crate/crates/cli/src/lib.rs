//! Manifest-driven batch computations for `symcirc`.

pub mod cache;
pub mod manifest;
pub mod report;
pub mod run;

pub use manifest::Manifest;
pub use run::{run, Command, Outcome};

/// Byte-stable rendering of a report.
pub fn render(report: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}
