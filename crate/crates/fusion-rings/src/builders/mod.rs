//! Corpus construction, file formats and enumeration by type.

pub mod corpus;
pub mod enumerate;
pub mod families;
pub mod format;
pub mod groups;

pub use corpus::corpus;
pub use enumerate::{enumerate_by_type, TypeVector};
pub use families::{class_hypergroup, family_ring, group_ring, near_group, rep_ring};
pub use format::{parse, parse_structured, parse_text, serialize};
pub use groups::{abelian_from_spec, catalog_group, group_from_generators, parse_generators, FiniteGroup, CATALOG};
