//! Deterministic procedural synthesis of household scenes for robot
//! learning: rectilinear floorplans, semantic furnishing, PBR material and
//! light assignment, physics annotation, and task/episode manifests.
//!
//! The pipeline runs in four stages over a validated asset catalog:
//!
//! 1. [`layout`] — scored multi-floor floorplans with walls, doors and
//!    staircases;
//! 2. [`furnish`] — two-phase semantic placement (basic furniture, then
//!    interactables on support surfaces);
//! 3. [`dress`] — PBR material assignment and photometric lights;
//! 4. [`physicalize`] — colliders, friction/restitution/mass, and joints
//!    for articulated parts.
//!
//! [`scenefile`] serializes the result as a canonical, self-contained,
//! hash-addressed scene document; [`taskgen`] binds task templates to
//! scenes and emits episode manifests. Every sampled quantity flows
//! through the counter-based streams in [`rng`], so equal inputs always
//! produce byte-identical outputs.
//!
//! See the crate `examples/` directory for one runnable program per stage,
//! and the `scenesmith` binary for batch generation.

pub mod catalog;
pub mod geom;
pub mod rng;

pub use catalog::{
    load_catalog, lint_catalog, AssetCategory, AssetFilter, AssetRecord, AssetSubtype, Catalog,
    CatalogError, MaterialClass, MaterialRecord, PlacementTag, RoomType,
};
pub use rng::Stream;

/// Engine version recorded in generated scene headers.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
