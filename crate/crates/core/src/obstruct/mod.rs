//! Obstructions to small Gordian-type distances and their aggregation.

pub mod criteria;
pub mod quadform;
pub mod report;

pub use criteria::{
    cc_bar_witness_search, murakami_obstruction, parity_criterion, signature_bound, CcBarVerdict, CriterionError,
    MurakamiVerdict, ParityVerdict,
};
pub use quadform::{quadform_represents, QuadFormError, QuadFormVerdict, Refutation};
pub use report::{build_report, KnotInput, ObstructionReport, ReportError, ReportOptions, SearchBounds, Verdict};
