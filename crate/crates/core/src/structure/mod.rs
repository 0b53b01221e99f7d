//! Series, normal lattices, subgroup enumeration and simple-factor recognition.

pub(crate) mod lattice;
mod series;
mod simple;
mod subgroups;

pub use lattice::{
    chief_series, chief_series_seeded, chief_series_through, minimal_normal_subgroups,
    normal_subgroups, socle, ChiefSeries, Section,
};
pub use series::{
    center, centralizer_of_section, derived_series, derived_subgroup, is_nilpotent, is_soluble,
    lower_central_series, soluble_radical, upper_central_series,
};
pub use simple::{
    decompose_char_simple, identify_simple, is_simple, CharSimple, SimpleKind, SimpleRow,
    SimpleType, SIMPLE_TABLE, SIMPLE_TABLE_LIMIT,
};
pub use subgroups::all_subgroups;

#[allow(unused_imports)]
pub(crate) use simple::{factorize, is_prime, prime_power};
