//! The cover-construction pipeline: models, point sampling,
//! interpolation, the double cover, weighted sections, the multiplication
//! table, and the emitted Z and X models.

pub mod cover;
pub mod divisor;
pub mod interpolate;
pub mod loader;
pub mod model;
pub mod multable;
pub mod sample;

pub use cover::{build_double_cover, cover_relations, find_weighted_sections};
pub use divisor::{find_section_with_divisor, CurveCondition, DivisorConstraint};
pub use interpolate::interpolate_vanishing_forms;
pub use loader::{load_model, LoadedModel};
pub use model::VarietyModel;
pub use multable::{
    fix_scalings_by_associativity, synthetic_mu7_table, verify_multable, MulEntry, MulTable,
};
pub use sample::{sample_points, PointSample, SampleStrategy};
