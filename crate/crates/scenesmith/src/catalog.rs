//! Annotated asset and material library: loading, validation, indexing.
//!
//! The catalog document is a versioned JSON file (`agentworld-catalog/1`)
//! with top-level `{schema_version, assets[], materials[], co_occurrence[]}`.
//! All lengths are meters, masses kilograms. A catalog is immutable after
//! load and safe to share across generation workers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

pub const CATALOG_SCHEMA: &str = "agentworld-catalog/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AssetCategory {
    Basic,
    Interactable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AssetSubtype {
    Furniture,
    Appliance,
    Tool,
    Food,
    Container,
    Decor,
    Clothing,
    Other,
}

impl AssetSubtype {
    pub const ALL: [AssetSubtype; 8] = [
        AssetSubtype::Furniture,
        AssetSubtype::Appliance,
        AssetSubtype::Tool,
        AssetSubtype::Food,
        AssetSubtype::Container,
        AssetSubtype::Decor,
        AssetSubtype::Clothing,
        AssetSubtype::Other,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            AssetSubtype::Furniture => "furniture",
            AssetSubtype::Appliance => "appliance",
            AssetSubtype::Tool => "tool",
            AssetSubtype::Food => "food",
            AssetSubtype::Container => "container",
            AssetSubtype::Decor => "decor",
            AssetSubtype::Clothing => "clothing",
            AssetSubtype::Other => "other",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, Hash)]
#[serde(rename_all = "snake_case")]
pub enum RoomType {
    LivingRoom,
    Kitchen,
    Bedroom,
}

impl RoomType {
    pub const ALL: [RoomType; 3] = [RoomType::LivingRoom, RoomType::Kitchen, RoomType::Bedroom];

    pub fn name(&self) -> &'static str {
        match self {
            RoomType::LivingRoom => "living_room",
            RoomType::Kitchen => "kitchen",
            RoomType::Bedroom => "bedroom",
        }
    }
}

impl fmt::Display for RoomType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One entry of an asset's `room_affinity` set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoomAffinity {
    LivingRoom,
    Kitchen,
    Bedroom,
    Any,
}

impl RoomAffinity {
    pub fn matches(&self, room: RoomType) -> bool {
        match self {
            RoomAffinity::Any => true,
            RoomAffinity::LivingRoom => room == RoomType::LivingRoom,
            RoomAffinity::Kitchen => room == RoomType::Kitchen,
            RoomAffinity::Bedroom => room == RoomType::Bedroom,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MaterialClass {
    Wood,
    Metal,
    Ceramic,
    Fabric,
    Plastic,
    Glass,
    Stone,
    Organic,
}

impl MaterialClass {
    pub const ALL: [MaterialClass; 8] = [
        MaterialClass::Wood,
        MaterialClass::Metal,
        MaterialClass::Ceramic,
        MaterialClass::Fabric,
        MaterialClass::Plastic,
        MaterialClass::Glass,
        MaterialClass::Stone,
        MaterialClass::Organic,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MaterialClass::Wood => "wood",
            MaterialClass::Metal => "metal",
            MaterialClass::Ceramic => "ceramic",
            MaterialClass::Fabric => "fabric",
            MaterialClass::Plastic => "plastic",
            MaterialClass::Glass => "glass",
            MaterialClass::Stone => "stone",
            MaterialClass::Organic => "organic",
        }
    }

    pub fn from_name(s: &str) -> Option<MaterialClass> {
        Self::ALL.iter().copied().find(|c| c.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlacementTag {
    OnFloor,
    OnSurface,
    OnBed,
    Hangable,
    WallMounted,
    InContainer,
}

/// Axis-aligned asset extent in meters. `x` is width, `y` depth, `z` height.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Bounds {
    pub fn volume(&self) -> f64 {
        self.x * self.y * self.z
    }

    pub fn min_dim(&self) -> f64 {
        self.x.min(self.y).min(self.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JointKindHint {
    DoorLike,
    DrawerLike,
    ButtonLike,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArticulatedPart {
    pub part_id: String,
    pub joint: JointKindHint,
    /// Degrees for door-like parts, meters for drawer- and button-like.
    pub travel_hint: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArticulationTemplate {
    pub parts: Vec<ArticulatedPart>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssetRecord {
    pub asset_id: String,
    pub display_name: String,
    pub category: AssetCategory,
    pub subtype: AssetSubtype,
    pub room_affinity: BTreeSet<RoomAffinity>,
    pub bounds: Bounds,
    pub material_class: MaterialClass,
    #[serde(default)]
    pub placement_tags: BTreeSet<PlacementTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass_hint: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub articulation: Option<ArticulationTemplate>,
    /// Opaque mesh path/URI; never opened by this engine.
    pub mesh_ref: String,
}

impl AssetRecord {
    pub fn fits_room(&self, room: RoomType) -> bool {
        self.room_affinity.iter().any(|a| a.matches(room))
    }

    pub fn has_tag(&self, tag: PlacementTag) -> bool {
        self.placement_tags.contains(&tag)
    }

    /// Lowercased word tokens of `asset_id` and `display_name`, used for
    /// semantic keyword matching ("sofa", "bed", "fridge", ...).
    pub fn tokens(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for source in [&self.asset_id, &self.display_name] {
            out.extend(split_tokens(source));
        }
        out
    }

    pub fn has_keyword(&self, keyword: &str) -> bool {
        let kw = keyword.to_ascii_lowercase();
        [&self.asset_id, &self.display_name]
            .iter()
            .any(|s| split_tokens(s).any(|t| t == kw))
    }
}

fn split_tokens(s: &str) -> impl Iterator<Item = String> + '_ {
    s.split(|c: char| !c.is_ascii_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(|t| t.to_ascii_lowercase())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MaterialFamily {
    Marble,
    Brick,
    WoodGrain,
    CeramicFinish,
    FabricTexture,
    MetallicCoating,
    Paint,
    Tile,
}

/// A surface class a material may be applied to: an architecture element or
/// assets of a given material class. Serialized as `"wall"`, `"floor"`,
/// `"ceiling"`, or `"asset:<class>"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MaterialTarget {
    Wall,
    Floor,
    Ceiling,
    Asset(MaterialClass),
}

impl fmt::Display for MaterialTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaterialTarget::Wall => f.write_str("wall"),
            MaterialTarget::Floor => f.write_str("floor"),
            MaterialTarget::Ceiling => f.write_str("ceiling"),
            MaterialTarget::Asset(c) => write!(f, "asset:{}", c.name()),
        }
    }
}

impl std::str::FromStr for MaterialTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "wall" => Ok(MaterialTarget::Wall),
            "floor" => Ok(MaterialTarget::Floor),
            "ceiling" => Ok(MaterialTarget::Ceiling),
            other => {
                if let Some(class) = other.strip_prefix("asset:") {
                    MaterialClass::from_name(class)
                        .map(MaterialTarget::Asset)
                        .ok_or_else(|| format!("unknown material class `{class}`"))
                } else {
                    Err(format!("unknown material target `{other}`"))
                }
            }
        }
    }
}

impl Serialize for MaterialTarget {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MaterialTarget {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PbrParams {
    pub base_color: [f64; 3],
    pub roughness: f64,
    pub metallic: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaterialRecord {
    pub material_id: String,
    pub family: MaterialFamily,
    pub applicable_to: BTreeSet<MaterialTarget>,
    pub pbr_params: PbrParams,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoRelation {
    Requires,
    Excludes,
    PrefersNear,
}

/// Catalog-level constraint between assets; `subject` and `object` are
/// asset ids or subtype names.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoOccurrenceRule {
    pub subject: String,
    pub relation: CoRelation,
    pub object: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<f64>,
}

#[derive(Debug, Deserialize)]
struct CatalogDocument {
    schema_version: String,
    assets: Vec<AssetRecord>,
    #[serde(default)]
    materials: Vec<MaterialRecord>,
    #[serde(default)]
    co_occurrence: Vec<CoOccurrenceRule>,
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("cannot read catalog: {0}")]
    Io(#[from] std::io::Error),
    #[error("catalog parse error: {0}")]
    Parse(String),
    #[error("unsupported catalog schema `{0}`, expected `{CATALOG_SCHEMA}`")]
    SchemaVersion(String),
    #[error("record `{record}`, field `{field}`: {message}")]
    InvariantViolation {
        record: String,
        field: String,
        message: String,
    },
}

fn violation(record: &str, field: &str, message: impl Into<String>) -> CatalogError {
    CatalogError::InvariantViolation {
        record: record.to_string(),
        field: field.to_string(),
        message: message.into(),
    }
}

/// Indexed, validated asset/material library.
#[derive(Debug, Clone)]
pub struct Catalog {
    assets: Vec<AssetRecord>,
    materials: Vec<MaterialRecord>,
    co_occurrence: Vec<CoOccurrenceRule>,
    by_category: BTreeMap<AssetCategory, Vec<usize>>,
    by_subtype: BTreeMap<AssetSubtype, Vec<usize>>,
    by_room: BTreeMap<RoomType, Vec<usize>>,
    by_tag: BTreeMap<PlacementTag, Vec<usize>>,
    id_index: BTreeMap<String, usize>,
}

/// Filter for [`Catalog::query`]; all provided fields must match.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct AssetFilter {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<AssetCategory>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subtype: Option<AssetSubtype>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub room: Option<RoomType>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<PlacementTag>,
}

impl AssetFilter {
    pub fn matches(&self, record: &AssetRecord) -> bool {
        self.category.map_or(true, |c| record.category == c)
            && self.subtype.map_or(true, |s| record.subtype == s)
            && self.room.map_or(true, |r| record.fits_room(r))
            && self.tag.map_or(true, |t| record.has_tag(t))
    }
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
    let bytes = std::fs::read(path)?;
    catalog_from_slice(&bytes)
}

pub fn catalog_from_slice(bytes: &[u8]) -> Result<Catalog, CatalogError> {
    let doc: CatalogDocument =
        serde_json::from_slice(bytes).map_err(|e| CatalogError::Parse(e.to_string()))?;
    Catalog::from_document(doc)
}

impl Catalog {
    fn from_document(doc: CatalogDocument) -> Result<Catalog, CatalogError> {
        if doc.schema_version != CATALOG_SCHEMA {
            return Err(CatalogError::SchemaVersion(doc.schema_version));
        }
        let mut assets = doc.assets;
        assets.sort_by(|a, b| a.asset_id.cmp(&b.asset_id));
        for record in &assets {
            validate_asset(record)?;
        }
        for i in 1..assets.len() {
            if assets[i].asset_id == assets[i - 1].asset_id {
                return Err(violation(&assets[i].asset_id, "asset_id", "duplicate asset_id"));
            }
        }
        let mut materials = doc.materials;
        materials.sort_by(|a, b| a.material_id.cmp(&b.material_id));
        for material in &materials {
            validate_material(material)?;
        }
        for i in 1..materials.len() {
            if materials[i].material_id == materials[i - 1].material_id {
                return Err(violation(
                    &materials[i].material_id,
                    "material_id",
                    "duplicate material_id",
                ));
            }
        }
        for rule in &doc.co_occurrence {
            validate_rule(rule)?;
        }

        let mut by_category: BTreeMap<AssetCategory, Vec<usize>> = BTreeMap::new();
        let mut by_subtype: BTreeMap<AssetSubtype, Vec<usize>> = BTreeMap::new();
        let mut by_room: BTreeMap<RoomType, Vec<usize>> = BTreeMap::new();
        let mut by_tag: BTreeMap<PlacementTag, Vec<usize>> = BTreeMap::new();
        let mut id_index = BTreeMap::new();
        for (i, record) in assets.iter().enumerate() {
            by_category.entry(record.category).or_default().push(i);
            by_subtype.entry(record.subtype).or_default().push(i);
            for room in RoomType::ALL {
                if record.fits_room(room) {
                    by_room.entry(room).or_default().push(i);
                }
            }
            for tag in &record.placement_tags {
                by_tag.entry(*tag).or_default().push(i);
            }
            id_index.insert(record.asset_id.clone(), i);
        }

        Ok(Catalog {
            assets,
            materials,
            co_occurrence: doc.co_occurrence,
            by_category,
            by_subtype,
            by_room,
            by_tag,
            id_index,
        })
    }

    pub fn assets(&self) -> &[AssetRecord] {
        &self.assets
    }

    pub fn materials(&self) -> &[MaterialRecord] {
        &self.materials
    }

    pub fn co_occurrence(&self) -> &[CoOccurrenceRule] {
        &self.co_occurrence
    }

    pub fn asset(&self, asset_id: &str) -> Option<&AssetRecord> {
        self.id_index.get(asset_id).map(|&i| &self.assets[i])
    }

    /// All records matching every provided filter field, ordered by asset_id.
    pub fn query(&self, filter: &AssetFilter) -> Vec<&AssetRecord> {
        // Narrow through the most selective available index, then verify the
        // full filter; assets are stored sorted by id so index order is id
        // order already.
        let candidate: Option<&Vec<usize>> = [
            filter.subtype.and_then(|s| self.by_subtype.get(&s)),
            filter.tag.and_then(|t| self.by_tag.get(&t)),
            filter.category.and_then(|c| self.by_category.get(&c)),
            filter.room.and_then(|r| self.by_room.get(&r)),
        ]
        .into_iter()
        .flatten()
        .min_by_key(|v| v.len());

        match candidate {
            Some(indices) => indices
                .iter()
                .map(|&i| &self.assets[i])
                .filter(|r| filter.matches(r))
                .collect(),
            None => {
                let narrowed = filter.category.is_some()
                    || filter.subtype.is_some()
                    || filter.room.is_some()
                    || filter.tag.is_some();
                if narrowed {
                    // A narrowing field hit an empty index bucket.
                    self.assets.iter().filter(|r| filter.matches(r)).collect()
                } else {
                    self.assets.iter().collect()
                }
            }
        }
    }

    pub fn materials_for(&self, target: MaterialTarget) -> Vec<&MaterialRecord> {
        self.materials
            .iter()
            .filter(|m| m.applicable_to.contains(&target))
            .collect()
    }

    pub fn material(&self, material_id: &str) -> Option<&MaterialRecord> {
        self.materials.iter().find(|m| m.material_id == material_id)
    }

    /// True if `name` resolves as an asset id or a subtype name.
    pub fn resolves(&self, name: &str) -> bool {
        self.id_index.contains_key(name)
            || AssetSubtype::ALL.iter().any(|s| s.name() == name)
    }
}

fn validate_asset(record: &AssetRecord) -> Result<(), CatalogError> {
    let id = &record.asset_id;
    if id.is_empty() {
        return Err(violation("<unnamed>", "asset_id", "empty asset_id"));
    }
    let b = record.bounds;
    if !(b.x > 0.0 && b.y > 0.0 && b.z > 0.0) || !b.x.is_finite() || !b.y.is_finite() || !b.z.is_finite() {
        return Err(violation(id, "bounds", "bounds must be strictly positive in all dimensions"));
    }
    if record.room_affinity.is_empty() {
        return Err(violation(id, "room_affinity", "room_affinity must be non-empty"));
    }
    if record.category == AssetCategory::Basic
        && !record.has_tag(PlacementTag::OnFloor)
        && !record.has_tag(PlacementTag::WallMounted)
    {
        return Err(violation(
            id,
            "placement_tags",
            "basic assets must carry on_floor or wall_mounted",
        ));
    }
    if record.articulation.is_some() && record.category != AssetCategory::Interactable {
        return Err(violation(
            id,
            "articulation",
            "articulation is allowed only for interactable assets",
        ));
    }
    if let Some(mass) = record.mass_hint {
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(violation(id, "mass_hint", "mass_hint must be positive"));
        }
    }
    if let Some(template) = &record.articulation {
        if template.parts.is_empty() {
            return Err(violation(id, "articulation.parts", "parts must be non-empty"));
        }
        let mut part_ids = BTreeSet::new();
        for part in &template.parts {
            if !(part.travel_hint > 0.0) || !part.travel_hint.is_finite() {
                return Err(violation(
                    id,
                    "articulation.travel_hint",
                    format!("part `{}` travel_hint must be positive", part.part_id),
                ));
            }
            if !part_ids.insert(&part.part_id) {
                return Err(violation(
                    id,
                    "articulation.part_id",
                    format!("duplicate part_id `{}`", part.part_id),
                ));
            }
        }
    }
    Ok(())
}

fn validate_material(material: &MaterialRecord) -> Result<(), CatalogError> {
    let id = &material.material_id;
    if material.applicable_to.is_empty() {
        return Err(violation(id, "applicable_to", "applicable_to must be non-empty"));
    }
    let p = &material.pbr_params;
    let unit = |v: f64| (0.0..=1.0).contains(&v);
    if !p.base_color.iter().all(|&v| unit(v)) {
        return Err(violation(id, "pbr_params.base_color", "components must be in [0, 1]"));
    }
    if !unit(p.roughness) {
        return Err(violation(id, "pbr_params.roughness", "must be in [0, 1]"));
    }
    if !unit(p.metallic) {
        return Err(violation(id, "pbr_params.metallic", "must be in [0, 1]"));
    }
    Ok(())
}

fn validate_rule(rule: &CoOccurrenceRule) -> Result<(), CatalogError> {
    let name = format!("{} {:?} {}", rule.subject, rule.relation, rule.object);
    if rule.relation == CoRelation::Excludes && rule.subject == rule.object {
        return Err(violation(&name, "object", "excludes rule must name distinct subject and object"));
    }
    match (rule.relation, rule.weight) {
        (CoRelation::PrefersNear, Some(w)) if w >= 0.0 && w.is_finite() => Ok(()),
        (CoRelation::PrefersNear, Some(_)) => {
            Err(violation(&name, "weight", "weight must be finite and >= 0"))
        }
        (CoRelation::PrefersNear, None) => {
            Err(violation(&name, "weight", "prefers_near rule requires a weight"))
        }
        (_, Some(_)) => Err(violation(&name, "weight", "weight is only valid for prefers_near")),
        (_, None) => Ok(()),
    }
}

/// Room-type coverage a usable catalog must provide; shared with the
/// furnishing stage's mandatory slots.
pub(crate) const MANDATORY_SLOTS: &[(RoomType, &[&str])] = &[
    (RoomType::LivingRoom, &["sofa", "tv"]),
    (RoomType::Bedroom, &["bed", "chair"]),
    (RoomType::Kitchen, &["table"]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LintCode {
    RoomCoverage,
    MissingPlacementTags,
    DanglingRule,
}

#[derive(Debug, Clone, Serialize)]
pub struct LintWarning {
    pub code: LintCode,
    pub message: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct LintReport {
    pub warnings: Vec<LintWarning>,
}

impl LintReport {
    pub fn is_clean(&self) -> bool {
        self.warnings.is_empty()
    }
}

/// Advisory checks that assist the one-time annotation of new assets.
/// Lint never fails; problems are returned as warnings.
pub fn lint_catalog(catalog: &Catalog) -> LintReport {
    let mut warnings = Vec::new();

    for &(room, keywords) in MANDATORY_SLOTS {
        let room_has_assets = catalog.assets().iter().any(|a| a.fits_room(room));
        if !room_has_assets {
            continue;
        }
        for &keyword in keywords {
            let covered = catalog.assets().iter().any(|a| {
                a.category == AssetCategory::Basic && a.fits_room(room) && a.has_keyword(keyword)
            });
            if !covered {
                warnings.push(LintWarning {
                    code: LintCode::RoomCoverage,
                    message: format!("{room} lacks {keyword}-class basic asset"),
                });
            }
        }
    }

    for record in catalog.assets() {
        if record.category == AssetCategory::Interactable && record.placement_tags.is_empty() {
            warnings.push(LintWarning {
                code: LintCode::MissingPlacementTags,
                message: format!(
                    "interactable asset `{}` has no placement_tags; it can never be placed",
                    record.asset_id
                ),
            });
        }
    }

    for rule in catalog.co_occurrence() {
        for name in [&rule.subject, &rule.object] {
            if !catalog.resolves(name) {
                warnings.push(LintWarning {
                    code: LintCode::DanglingRule,
                    message: format!(
                        "dangling rule: `{name}` is neither an asset_id nor a subtype"
                    ),
                });
            }
        }
    }

    warnings.sort_by(|a, b| a.message.cmp(&b.message));
    LintReport { warnings }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sofa_json() -> serde_json::Value {
        serde_json::json!({
            "asset_id": "sofa_test",
            "display_name": "Test Sofa",
            "category": "basic",
            "subtype": "furniture",
            "room_affinity": ["living_room"],
            "bounds": {"x": 2.0, "y": 0.9, "z": 0.8},
            "material_class": "fabric",
            "placement_tags": ["on_floor"],
            "mesh_ref": "meshes/sofa_test.glb"
        })
    }

    fn doc_with(assets: Vec<serde_json::Value>) -> Vec<u8> {
        serde_json::to_vec(&serde_json::json!({
            "schema_version": CATALOG_SCHEMA,
            "assets": assets,
            "materials": [],
            "co_occurrence": []
        }))
        .unwrap()
    }

    #[test]
    fn minimal_catalog_indexes_one_basic_asset() {
        let catalog = catalog_from_slice(&doc_with(vec![sofa_json()])).unwrap();
        assert_eq!(catalog.assets().len(), 1);
        let hits = catalog.query(&AssetFilter {
            room: Some(RoomType::LivingRoom),
            category: Some(AssetCategory::Basic),
            ..Default::default()
        });
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].asset_id, "sofa_test");
        assert!(catalog
            .query(&AssetFilter { room: Some(RoomType::Kitchen), ..Default::default() })
            .is_empty());
    }

    #[test]
    fn zero_bounds_rejected_naming_field() {
        let mut bad = sofa_json();
        bad["bounds"]["x"] = serde_json::json!(0.0);
        let err = catalog_from_slice(&doc_with(vec![bad])).unwrap_err();
        match err {
            CatalogError::InvariantViolation { field, .. } => assert_eq!(field, "bounds"),
            other => panic!("expected invariant violation, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_asset_id_rejected() {
        let err = catalog_from_slice(&doc_with(vec![sofa_json(), sofa_json()])).unwrap_err();
        match err {
            CatalogError::InvariantViolation { field, .. } => assert_eq!(field, "asset_id"),
            other => panic!("expected invariant violation, got {other:?}"),
        }
    }

    #[test]
    fn basic_asset_needs_floor_or_wall_tag() {
        let mut bad = sofa_json();
        bad["placement_tags"] = serde_json::json!(["on_surface"]);
        assert!(catalog_from_slice(&doc_with(vec![bad])).is_err());
    }

    #[test]
    fn articulation_only_on_interactables() {
        let mut bad = sofa_json();
        bad["articulation"] = serde_json::json!({
            "parts": [{"part_id": "door", "joint": "door_like", "travel_hint": 90.0}]
        });
        let err = catalog_from_slice(&doc_with(vec![bad])).unwrap_err();
        match err {
            CatalogError::InvariantViolation { field, .. } => assert_eq!(field, "articulation"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_material_class_is_a_parse_error() {
        let mut bad = sofa_json();
        bad["material_class"] = serde_json::json!("adamantium");
        assert!(matches!(
            catalog_from_slice(&doc_with(vec![bad])),
            Err(CatalogError::Parse(_))
        ));
    }

    #[test]
    fn wrong_schema_version_rejected() {
        let bytes = serde_json::to_vec(&serde_json::json!({
            "schema_version": "agentworld-catalog/99",
            "assets": []
        }))
        .unwrap();
        assert!(matches!(
            catalog_from_slice(&bytes),
            Err(CatalogError::SchemaVersion(_))
        ));
    }

    #[test]
    fn lint_flags_missing_bed() {
        // Bedroom-affine asset exists, but nothing bed-like.
        let mut chair = sofa_json();
        chair["asset_id"] = serde_json::json!("chair_test");
        chair["room_affinity"] = serde_json::json!(["bedroom"]);
        let catalog = catalog_from_slice(&doc_with(vec![chair])).unwrap();
        let report = lint_catalog(&catalog);
        assert!(report
            .warnings
            .iter()
            .any(|w| w.code == LintCode::RoomCoverage && w.message.contains("bedroom lacks bed")));
    }

    #[test]
    fn lint_flags_dangling_rule() {
        let bytes = serde_json::to_vec(&serde_json::json!({
            "schema_version": CATALOG_SCHEMA,
            "assets": [sofa_json()],
            "materials": [],
            "co_occurrence": [
                {"subject": "sofa_test", "relation": "prefers_near", "object": "ghost_asset", "weight": 1.0}
            ]
        }))
        .unwrap();
        let catalog = catalog_from_slice(&bytes).unwrap();
        let report = lint_catalog(&catalog);
        assert!(report
            .warnings
            .iter()
            .any(|w| w.code == LintCode::DanglingRule && w.message.contains("ghost_asset")));
    }

    #[test]
    fn load_is_pure_in_file_bytes() {
        let bytes = doc_with(vec![sofa_json()]);
        let a = catalog_from_slice(&bytes).unwrap();
        let b = catalog_from_slice(&bytes).unwrap();
        assert_eq!(a.assets(), b.assets());
        assert_eq!(a.materials(), b.materials());
    }

    #[test]
    fn keyword_matching_respects_token_boundaries() {
        let mut nightstand = sofa_json();
        nightstand["asset_id"] = serde_json::json!("bedside_table_oak");
        nightstand["display_name"] = serde_json::json!("Bedside Table");
        let catalog = catalog_from_slice(&doc_with(vec![nightstand])).unwrap();
        let record = catalog.asset("bedside_table_oak").unwrap();
        assert!(!record.has_keyword("bed"));
        assert!(record.has_keyword("table"));
    }
}
