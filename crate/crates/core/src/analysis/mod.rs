//! Centrality of chief factors, hypercentres, residuals, `Int_F` and reports.

mod centrality;
mod constructions;
mod membership;
mod report;
mod t2;

pub use centrality::{
    centrality, centrality_explicit, centrality_shortcut, is_central_factor, Centrality,
    CentralityPath,
};
pub use constructions::{f_maximal_subgroups, hypercenter, int_f, residual};
pub(crate) use membership::member_char_simple;
pub use membership::FactorVerdict;
pub use report::{analyze, AnalysisReport, FactorReport, T2Report, Witness};
pub use t2::{t2_conditions, T2Conditions, T2Witness};
