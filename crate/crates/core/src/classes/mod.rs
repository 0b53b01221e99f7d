//! Classes of groups: the builtin formations, the `E` operator, and the
//! `Jcs` and `ca` constructions, with capability flags and a small
//! expression language.

mod parse;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::structure::{SimpleType, SIMPLE_TABLE};

pub use parse::parse_class_expr;

/// A set of non-abelian simple groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum JSet {
    All,
    Listed(BTreeSet<String>),
}

impl JSet {
    /// Every name must be a row of the simple-group table.
    pub fn listed<I, S>(names: I) -> Result<JSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = BTreeSet::new();
        for n in names {
            set.insert(SimpleType::named(n.as_ref())?.name);
        }
        Ok(JSet::Listed(set))
    }

    pub fn contains(&self, t: &SimpleType) -> bool {
        !t.is_abelian()
            && match self {
                JSet::All => true,
                JSet::Listed(names) => names.contains(&t.name),
            }
    }

    /// Every member has a nilpotent outer automorphism group.
    pub fn out_is_nilpotent(&self) -> bool {
        match self {
            JSet::All => false,
            JSet::Listed(names) => names.iter().all(|n| {
                SIMPLE_TABLE
                    .iter()
                    .any(|r| r.name == n && r.out_is_nilpotent)
            }),
        }
    }
}

impl fmt::Display for JSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JSet::All => f.write_str("all"),
            JSet::Listed(names) => {
                let v: Vec<&str> = names.iter().map(String::as_str).collect();
                write!(f, "{{{}}}", v.join(", "))
            }
        }
    }
}

/// Admissible composition factors for `E(base)`: all primes when `soluble`,
/// plus the listed non-abelian simple groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseSet {
    pub soluble: bool,
    pub names: BTreeSet<String>,
}

impl BaseSet {
    pub fn soluble_plus<I, S>(names: I) -> Result<BaseSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = BTreeSet::new();
        for n in names {
            set.insert(SimpleType::named(n.as_ref())?.name);
        }
        Ok(BaseSet {
            soluble: true,
            names: set,
        })
    }

    pub fn contains(&self, t: &SimpleType) -> bool {
        if t.is_abelian() {
            self.soluble
        } else {
            self.names.contains(&t.name)
        }
    }
}

impl fmt::Display for BaseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("S")?;
        if !self.names.is_empty() {
            let v: Vec<&str> = self.names.iter().map(String::as_str).collect();
            write!(f, "|{}", v.join(","))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Abelian,
    Nilpotent,
    Soluble,
    Supersoluble,
    /// `E(base)`: every composition factor lies in `base`.
    CompositionFactors(BaseSet),
    /// Chief `F`-factors are `F`-central, the others are simple `J`-groups.
    Jcs(Box<GroupClass>, JSet),
    /// Abelian chief factors are `F`-central, the others are simple.
    Ca(Box<GroupClass>),
}

/// Closure properties asserted for a class by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ClassFlags {
    pub is_formation: bool,
    pub is_hereditary: bool,
    pub is_normally_hereditary: bool,
    pub is_saturated: bool,
    pub is_solubly_saturated: bool,
    pub is_fitting: bool,
    pub contains_nilpotent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupClass {
    kind: ClassKind,
    flags: ClassFlags,
}

const ALL_FLAGS: ClassFlags = ClassFlags {
    is_formation: true,
    is_hereditary: true,
    is_normally_hereditary: true,
    is_saturated: true,
    is_solubly_saturated: true,
    is_fitting: true,
    contains_nilpotent: true,
};

impl GroupClass {
    pub fn abelian() -> GroupClass {
        GroupClass {
            kind: ClassKind::Abelian,
            flags: ClassFlags {
                is_formation: true,
                is_hereditary: true,
                is_normally_hereditary: true,
                ..ClassFlags::default()
            },
        }
    }

    pub fn nilpotent() -> GroupClass {
        GroupClass {
            kind: ClassKind::Nilpotent,
            flags: ALL_FLAGS,
        }
    }

    pub fn soluble() -> GroupClass {
        GroupClass {
            kind: ClassKind::Soluble,
            flags: ALL_FLAGS,
        }
    }

    pub fn supersoluble() -> GroupClass {
        GroupClass {
            kind: ClassKind::Supersoluble,
            flags: ClassFlags {
                is_fitting: false,
                ..ALL_FLAGS
            },
        }
    }

    /// `E(base)`. Subgroup closure is only claimed when every listed group is
    /// minimal simple, so that its proper subgroups stay soluble.
    pub fn comp_factors_in(base: BaseSet) -> GroupClass {
        let hereditary = base.names.iter().all(|n| {
            SIMPLE_TABLE
                .iter()
                .any(|r| r.name == n && r.minimal_simple)
        });
        let with_primes = base.soluble;
        GroupClass {
            kind: ClassKind::CompositionFactors(base),
            flags: ClassFlags {
                is_formation: true,
                is_hereditary: hereditary,
                is_normally_hereditary: true,
                is_saturated: with_primes,
                is_solubly_saturated: true,
                is_fitting: true,
                contains_nilpotent: with_primes,
            },
        }
    }

    /// `F_Jcs`. A formation for every `F`; the remaining closure properties
    /// transfer from `F` when `F` is a solubly saturated formation containing
    /// the nilpotent groups.
    pub fn jcs(f: GroupClass, j: JSet) -> Result<GroupClass> {
        if !f.flags.is_formation {
            return Err(Error::Hypothesis(f.to_string(), "not a formation".into()));
        }
        let composition = f.flags.is_solubly_saturated && f.flags.contains_nilpotent;
        let flags = ClassFlags {
            is_formation: true,
            is_hereditary: false,
            is_normally_hereditary: composition && f.flags.is_normally_hereditary,
            is_saturated: false,
            is_solubly_saturated: composition,
            is_fitting: composition && f.flags.is_fitting && f.flags.is_normally_hereditary,
            contains_nilpotent: f.flags.contains_nilpotent,
        };
        Ok(GroupClass {
            kind: ClassKind::Jcs(Box::new(f), j),
            flags,
        })
    }

    pub fn ca(f: GroupClass) -> Result<GroupClass> {
        if !f.flags.is_formation {
            return Err(Error::Hypothesis(f.to_string(), "not a formation".into()));
        }
        let flags = ClassFlags {
            is_formation: true,
            contains_nilpotent: f.flags.contains_nilpotent,
            ..ClassFlags::default()
        };
        Ok(GroupClass {
            kind: ClassKind::Ca(Box::new(f)),
            flags,
        })
    }

    /// One of `abelian`, `nilpotent`, `soluble`, `supersoluble` (or `Ab`, `N`, `S`, `U`).
    pub fn builtin(name: &str) -> Option<GroupClass> {
        Some(match name {
            "abelian" | "Ab" => GroupClass::abelian(),
            "nilpotent" | "N" => GroupClass::nilpotent(),
            "soluble" | "S" => GroupClass::soluble(),
            "supersoluble" | "U" => GroupClass::supersoluble(),
            _ => return None,
        })
    }

    pub fn kind(&self) -> &ClassKind {
        &self.kind
    }

    pub fn flags(&self) -> ClassFlags {
        self.flags
    }

    pub fn name(&self) -> String {
        self.to_string()
    }

    /// The class whose centrality governs chief factors in membership tests:
    /// `F` for `Jcs(F, J)` and `ca(F)`, the class itself otherwise.
    pub fn factor_class(&self) -> &GroupClass {
        match &self.kind {
            ClassKind::Jcs(f, _) | ClassKind::Ca(f) => f,
            _ => self,
        }
    }

    /// `E` of the composition factors of members, when it is known: `E(S)`
    /// for the soluble builtins and the class itself for `E(base)`.
    pub fn composition_closure(&self) -> Option<GroupClass> {
        match &self.kind {
            ClassKind::Abelian | ClassKind::Nilpotent | ClassKind::Soluble | ClassKind::Supersoluble => {
                Some(GroupClass::comp_factors_in(BaseSet {
                    soluble: true,
                    names: BTreeSet::new(),
                }))
            }
            ClassKind::CompositionFactors(_) => Some(self.clone()),
            ClassKind::Jcs(..) | ClassKind::Ca(_) => None,
        }
    }

    /// Every member is soluble.
    pub fn is_soluble_class(&self) -> bool {
        match &self.kind {
            ClassKind::Abelian | ClassKind::Nilpotent | ClassKind::Soluble | ClassKind::Supersoluble => true,
            ClassKind::CompositionFactors(b) => b.names.is_empty(),
            ClassKind::Jcs(..) | ClassKind::Ca(_) => false,
        }
    }
}

impl fmt::Display for GroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ClassKind::Abelian => f.write_str("Ab"),
            ClassKind::Nilpotent => f.write_str("N"),
            ClassKind::Soluble => f.write_str("S"),
            ClassKind::Supersoluble => f.write_str("U"),
            ClassKind::CompositionFactors(b) => write!(f, "E({b})"),
            ClassKind::Jcs(inner, j) => write!(f, "Jcs({inner}, {j})"),
            ClassKind::Ca(inner) => write!(f, "ca({inner})"),
        }
    }
}
