//! Finitely presented groups: words, presentations, Todd–Coxeter coset
//! enumeration, Reidemeister–Schreier rewriting, and abelian invariants.

pub mod coset;
pub mod presentation;
pub mod quotient;
pub mod rewrite;
pub mod word;

pub use coset::{enumerate_cosets, CosetTable, EnumeratorOptions, Strategy};
pub use presentation::{
    format_presentation_file, parse_presentation_file, ClosureMode, FpPresentation,
    PresentationFile, SubgroupSpec,
};
pub use quotient::FiniteQuotient;
pub use rewrite::{
    abelian_invariants, subgroup_abelian_invariants, subgroup_presentation,
    AbelianInvariants, SubgroupPresentation,
};
pub use word::{parse_word, Word};
