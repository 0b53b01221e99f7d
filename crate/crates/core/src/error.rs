use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree {0} out of range")]
    DegreeOutOfRange(usize),
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("permutation syntax error at byte {pos}: {msg}")]
    PermutationSyntax { pos: usize, msg: String },
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("generators have mixed degrees")]
    DegreeMismatch,
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("element cap {cap} exceeded ({partial} elements enumerated so far)")]
    ElementCapExceeded { cap: usize, partial: usize },
    #[error("semidirect product of order {order} exceeds the membership budget {budget}")]
    SizeGuardExceeded { order: usize, budget: usize },
    #[error("subgroup enumeration budget exceeded: group order {order} > {budget}")]
    SubgroupBudgetExceeded { order: usize, budget: usize },
    #[error("not a subgroup")]
    NotSubgroup,
    #[error("not a normal subgroup")]
    NotNormal,
    #[error("generator images do not define a homomorphism")]
    NotHomomorphism,
    #[error("action is not by automorphisms")]
    NotAutomorphism,
    #[error("group is not simple")]
    NotSimple,
    #[error("no simple group of order {0} in the built-in table")]
    UnknownSimpleOrder(usize),
    #[error("unknown simple group name `{0}`")]
    UnknownSimpleName(String),
    #[error("section is not characteristically simple")]
    NotCharacteristicallySimple,
    #[error("class `{class}` has no centrality shortcut and the explicit construction (order {order}) exceeds the budget")]
    NoShortcutAvailable { class: String, order: usize },
    #[error("residual quotient is not a member of `{0}`; its formation flag is wrong")]
    FormationConsistencyViolation(String),
    #[error("class expression syntax error at byte {pos}: {msg}")]
    ClassSyntax { pos: usize, msg: String },
    #[error("group expression syntax error at byte {pos}: {msg}")]
    GroupSpecSyntax { pos: usize, msg: String },
    #[error("unknown check `{id}`; valid ids: {valid}")]
    UnknownCheck { id: String, valid: String },
    #[error("class `{0}` does not meet the hypothesis: {1}")]
    Hypothesis(String, String),
}

impl Error {
    /// True for errors caused by a configured cap or budget.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::ElementCapExceeded { .. }
                | Error::SizeGuardExceeded { .. }
                | Error::SubgroupBudgetExceeded { .. }
                | Error::NoShortcutAvailable { .. }
        )
    }

    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::PermutationSyntax { .. }
                | Error::RepeatedPoint(_)
                | Error::PointOutOfRange { .. }
                | Error::ClassSyntax { .. }
                | Error::GroupSpecSyntax { .. }
                | Error::UnknownSimpleName(_)
                | Error::UnknownCheck { .. }
        )
    }
}
