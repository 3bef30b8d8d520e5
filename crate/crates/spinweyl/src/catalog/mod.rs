//! Golden data from the published tables for E6, E7, E8, F4 and G2, the
//! label maps pinning computed representations to printed labels, and the
//! verification harness.

mod golden;
mod labels;
mod verify;
#[cfg(test)]
mod tests;

pub use golden::{label_dimension, load_tables, parse_chi, rows_for, spin_dimension, ChiColumn, GoldenRow};
pub use labels::{cover_labels, LabelMap};
pub use verify::{chi_at, chi_norm, verify_dims, verify_full, verify_table, Mode, RowCheck, TableReport, GENERIC_PARAMETERS, SAMPLE_PARAMETERS};
