//! Symmetric exchange moves on basis sequences and the bounded test bench
//! for their connectivity.

mod chain;
mod lift;
mod report;
mod sequence;
mod te;

pub use chain::uniform_swap_chain;
pub use lift::{lift_sequence, project_sequence, single_subset_exchange};
pub use report::{white_report, LabeledWitness, ReportEntry, WhiteReport};
pub use sequence::{apply_move, compatible, exchange_candidates, subset_exchange_candidates, BasisSequence, Move};
pub use te::{te1_via_lemma, te_check, Limits, TeClass, TeOutcome, TeVerdict};
