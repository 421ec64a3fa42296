//! 2D geometry shared by layout and placement: integer grid regions,
//! rectilinear polygons, and oriented-rectangle overlap tests.
//!
//! Layout generation works on an integer cell grid so that adjacency, area
//! and disjointness are exact; polygons in meters are derived from the grid
//! at the end. Placement works on oriented rectangles (footprints) tested
//! with the separating-axis theorem.

use std::collections::{BTreeSet, VecDeque};

pub type Cell = (i32, i32);

/// An edge-connected set of grid cells. Cell `(x, y)` spans the unit square
/// with corners `(x, y)` and `(x+1, y+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRegion {
    cells: BTreeSet<Cell>,
}

/// One axis-aligned unit edge of a region boundary, directed so the region
/// interior lies on its left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryEdge {
    pub from: Cell,
    pub to: Cell,
    /// Cell inside the region that this edge borders.
    pub inside: Cell,
    /// Cell on the far side (may be outside the footprint).
    pub outside: Cell,
}

impl GridRegion {
    pub fn new() -> Self {
        GridRegion { cells: BTreeSet::new() }
    }

    pub fn from_rect(x: i32, y: i32, w: i32, h: i32) -> Self {
        let mut cells = BTreeSet::new();
        for cx in x..x + w {
            for cy in y..y + h {
                cells.insert((cx, cy));
            }
        }
        GridRegion { cells }
    }

    pub fn from_cells<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        GridRegion { cells: iter.into_iter().collect() }
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn area_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn insert(&mut self, c: Cell) {
        self.cells.insert(c);
    }

    pub fn union(&self, other: &GridRegion) -> GridRegion {
        let mut cells = self.cells.clone();
        cells.extend(other.cells.iter().copied());
        GridRegion { cells }
    }

    pub fn intersects(&self, other: &GridRegion) -> bool {
        let (small, big) = if self.cells.len() <= other.cells.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.cells.iter().any(|c| big.cells.contains(c))
    }

    /// Inclusive cell-coordinate bounding box `(x0, y0, x1, y1)`.
    pub fn bbox(&self) -> (i32, i32, i32, i32) {
        let mut it = self.cells.iter();
        let first = *it.next().expect("bbox of empty region");
        let (mut x0, mut y0, mut x1, mut y1) = (first.0, first.1, first.0, first.1);
        for &(x, y) in it {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        (x0, y0, x1, y1)
    }

    /// True if the two regions share at least one unit edge.
    pub fn edge_adjacent(&self, other: &GridRegion) -> bool {
        self.shared_edge_count(other) > 0
    }

    pub fn shared_edge_count(&self, other: &GridRegion) -> usize {
        let mut n = 0;
        for &(x, y) in &self.cells {
            for nb in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                if other.cells.contains(&nb) {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn is_edge_connected(&self) -> bool {
        if self.cells.is_empty() {
            return false;
        }
        let start = *self.cells.iter().next().unwrap();
        let mut seen = BTreeSet::new();
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some((x, y)) = queue.pop_front() {
            for nb in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                if self.cells.contains(&nb) && seen.insert(nb) {
                    queue.push_back(nb);
                }
            }
        }
        seen.len() == self.cells.len()
    }

    /// True if the region has no enclosed holes: every non-region cell in the
    /// expanded bounding box is reachable from the box rim.
    pub fn is_simply_connected(&self) -> bool {
        if self.cells.is_empty() {
            return false;
        }
        let (x0, y0, x1, y1) = self.bbox();
        let (x0, y0, x1, y1) = (x0 - 1, y0 - 1, x1 + 1, y1 + 1);
        let mut seen = BTreeSet::new();
        let start = (x0, y0);
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some((x, y)) = queue.pop_front() {
            for nb in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                let (nx, ny) = nb;
                if nx < x0 || ny < y0 || nx > x1 || ny > y1 {
                    continue;
                }
                if !self.cells.contains(&nb) && seen.insert(nb) {
                    queue.push_back(nb);
                }
            }
        }
        let total = ((x1 - x0 + 1) as usize) * ((y1 - y0 + 1) as usize);
        seen.len() == total - self.cells.len()
    }

    /// All directed boundary unit edges, region on the left.
    pub fn boundary_edges(&self) -> Vec<BoundaryEdge> {
        let mut edges = Vec::new();
        for &(x, y) in &self.cells {
            let inside = (x, y);
            if !self.cells.contains(&(x, y - 1)) {
                edges.push(BoundaryEdge { from: (x, y), to: (x + 1, y), inside, outside: (x, y - 1) });
            }
            if !self.cells.contains(&(x + 1, y)) {
                edges.push(BoundaryEdge { from: (x + 1, y), to: (x + 1, y + 1), inside, outside: (x + 1, y) });
            }
            if !self.cells.contains(&(x, y + 1)) {
                edges.push(BoundaryEdge { from: (x + 1, y + 1), to: (x, y + 1), inside, outside: (x, y + 1) });
            }
            if !self.cells.contains(&(x - 1, y)) {
                edges.push(BoundaryEdge { from: (x, y + 1), to: (x, y), inside, outside: (x - 1, y) });
            }
        }
        edges
    }

    /// Trace the single counter-clockwise outer boundary loop as unit edges.
    ///
    /// Fails if the boundary is not a single simple loop (holes, or a pinch
    /// vertex where two diagonal cells touch only at a corner).
    pub fn boundary_loop(&self) -> Result<Vec<BoundaryEdge>, RegionError> {
        let edges = self.boundary_edges();
        if edges.is_empty() {
            return Err(RegionError::Empty);
        }
        // A vertex with two outgoing boundary edges is a pinch point.
        let mut by_start: std::collections::BTreeMap<Cell, BoundaryEdge> =
            std::collections::BTreeMap::new();
        for e in &edges {
            if by_start.insert(e.from, *e).is_some() {
                return Err(RegionError::Pinched(e.from));
            }
        }
        let first = edges
            .iter()
            .min_by_key(|e| e.from)
            .copied()
            .unwrap();
        let mut loop_edges = vec![first];
        let mut cursor = first.to;
        while cursor != first.from {
            let next = by_start
                .get(&cursor)
                .copied()
                .ok_or(RegionError::OpenBoundary(cursor))?;
            loop_edges.push(next);
            cursor = next.to;
        }
        if loop_edges.len() != edges.len() {
            return Err(RegionError::MultipleLoops);
        }
        Ok(loop_edges)
    }
}

impl Default for GridRegion {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegionError {
    #[error("region is empty")]
    Empty,
    #[error("region boundary pinches at vertex {0:?}")]
    Pinched(Cell),
    #[error("region boundary is open at vertex {0:?}")]
    OpenBoundary(Cell),
    #[error("region boundary has more than one loop")]
    MultipleLoops,
}

/// Signed shoelace area; counter-clockwise polygons are positive.
pub fn polygon_signed_area(points: &[[f64; 2]]) -> f64 {
    let n = points.len();
    let mut acc = 0.0;
    for i in 0..n {
        let [x0, y0] = points[i];
        let [x1, y1] = points[(i + 1) % n];
        acc += x0 * y1 - x1 * y0;
    }
    acc * 0.5
}

pub fn polygon_area(points: &[[f64; 2]]) -> f64 {
    polygon_signed_area(points).abs()
}

pub fn polygon_bbox(points: &[[f64; 2]]) -> ([f64; 2], [f64; 2]) {
    let mut min = [f64::INFINITY; 2];
    let mut max = [f64::NEG_INFINITY; 2];
    for p in points {
        for k in 0..2 {
            min[k] = min[k].min(p[k]);
            max[k] = max[k].max(p[k]);
        }
    }
    (min, max)
}

/// Area centroid of a simple polygon.
pub fn polygon_centroid(points: &[[f64; 2]]) -> [f64; 2] {
    let a = polygon_signed_area(points);
    let n = points.len();
    let mut cx = 0.0;
    let mut cy = 0.0;
    for i in 0..n {
        let [x0, y0] = points[i];
        let [x1, y1] = points[(i + 1) % n];
        let cross = x0 * y1 - x1 * y0;
        cx += (x0 + x1) * cross;
        cy += (y0 + y1) * cross;
    }
    [cx / (6.0 * a), cy / (6.0 * a)]
}

/// Even-odd crossing test. Points lying exactly on an edge give an
/// arbitrary but deterministic answer; callers that care use
/// [`distance_to_boundary`] for a margin.
pub fn point_in_polygon(p: [f64; 2], poly: &[[f64; 2]]) -> bool {
    let n = poly.len();
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let [xi, yi] = poly[i];
        let [xj, yj] = poly[j];
        if (yi > p[1]) != (yj > p[1]) {
            let x_cross = xi + (p[1] - yi) / (yj - yi) * (xj - xi);
            if p[0] < x_cross {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

pub fn point_segment_distance(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let ap = [p[0] - a[0], p[1] - a[1]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    let t = if len2 == 0.0 {
        0.0
    } else {
        ((ap[0] * ab[0] + ap[1] * ab[1]) / len2).clamp(0.0, 1.0)
    };
    let q = [a[0] + t * ab[0], a[1] + t * ab[1]];
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt()
}

pub fn distance_to_boundary(p: [f64; 2], poly: &[[f64; 2]]) -> f64 {
    let n = poly.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        best = best.min(point_segment_distance(p, poly[i], poly[(i + 1) % n]));
    }
    best
}

/// Yaw-oriented rectangle footprint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Obb {
    pub center: [f64; 2],
    pub half: [f64; 2],
    pub yaw: f64,
}

impl Obb {
    pub fn new(center: [f64; 2], half: [f64; 2], yaw: f64) -> Self {
        Obb { center, half, yaw }
    }

    pub fn axes(&self) -> [[f64; 2]; 2] {
        let (s, c) = self.yaw.sin_cos();
        [[c, s], [-s, c]]
    }

    pub fn corners(&self) -> [[f64; 2]; 4] {
        let [u, v] = self.axes();
        let [hx, hy] = self.half;
        let c = self.center;
        let mut out = [[0.0; 2]; 4];
        for (i, (sx, sy)) in [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)]
            .iter()
            .enumerate()
        {
            out[i] = [
                c[0] + sx * hx * u[0] + sy * hy * v[0],
                c[1] + sx * hx * u[1] + sy * hy * v[1],
            ];
        }
        out
    }

    /// Minimum overlap across the four separating axes. Positive means the
    /// rectangles interpenetrate by that depth; non-positive means a gap.
    pub fn penetration(&self, other: &Obb) -> f64 {
        let axes = [self.axes()[0], self.axes()[1], other.axes()[0], other.axes()[1]];
        let ca = self.corners();
        let cb = other.corners();
        let mut min_overlap = f64::INFINITY;
        for axis in axes {
            let (a_lo, a_hi) = project(&ca, axis);
            let (b_lo, b_hi) = project(&cb, axis);
            let overlap = a_hi.min(b_hi) - a_lo.max(b_lo);
            min_overlap = min_overlap.min(overlap);
        }
        min_overlap
    }

    /// True if the two footprints overlap by more than `tol` meters.
    /// Touching (or closer than tolerance) is allowed.
    pub fn overlaps_beyond(&self, other: &Obb, tol: f64) -> bool {
        self.penetration(other) > tol
    }

    /// True if the whole rectangle, shrunk by `margin`, lies inside `poly`.
    pub fn contained_in_polygon(&self, poly: &[[f64; 2]], margin: f64) -> bool {
        let shrunk = Obb {
            center: self.center,
            half: [
                (self.half[0] - margin).max(0.0),
                (self.half[1] - margin).max(0.0),
            ],
            yaw: self.yaw,
        };
        for corner in shrunk.corners() {
            if !point_in_polygon(corner, poly) {
                return false;
            }
        }
        // Corners inside is not enough for concave rooms: reject if any
        // boundary edge cuts through the rectangle.
        let n = poly.len();
        for i in 0..n {
            if shrunk.intersects_segment(poly[i], poly[(i + 1) % n], 0.0) {
                return false;
            }
        }
        true
    }

    /// SAT test between this rectangle and segment `a`-`b`. The segment has
    /// zero thickness, so along its own normal "intersection" means the
    /// segment line cuts strictly through the rectangle's projection; mere
    /// touching does not count.
    pub fn intersects_segment(&self, a: [f64; 2], b: [f64; 2], tol: f64) -> bool {
        let corners = self.corners();
        let seg = [a, b];
        for axis in self.axes() {
            let (r_lo, r_hi) = project(&corners, axis);
            let (s_lo, s_hi) = project(&seg, axis);
            if r_hi.min(s_hi) - r_lo.max(s_lo) <= tol {
                return false;
            }
        }
        let d = [b[0] - a[0], b[1] - a[1]];
        let len = (d[0] * d[0] + d[1] * d[1]).sqrt();
        if len > 0.0 {
            let normal = [-d[1] / len, d[0] / len];
            let (r_lo, r_hi) = project(&corners, normal);
            let p = a[0] * normal[0] + a[1] * normal[1];
            if (r_hi - p).min(p - r_lo) <= tol {
                return false;
            }
        }
        true
    }
}

fn project(points: &[[f64; 2]], axis: [f64; 2]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for p in points {
        let d = p[0] * axis[0] + p[1] * axis[1];
        lo = lo.min(d);
        hi = hi.max(d);
    }
    (lo, hi)
}

/// Overlap of `[a0, a1]` and `[b0, b1]` beyond `tol`.
pub fn intervals_overlap_beyond(a: (f64, f64), b: (f64, f64), tol: f64) -> bool {
    a.1.min(b.1) - a.0.max(b.0) > tol
}

pub fn normalize_yaw(yaw: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let mut y = yaw.rem_euclid(tau);
    if y >= tau {
        y = 0.0;
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rect_region_boundary() {
        let r = GridRegion::from_rect(0, 0, 3, 2);
        assert_eq!(r.area_cells(), 6);
        assert!(r.is_edge_connected());
        assert!(r.is_simply_connected());
        let loop_edges = r.boundary_loop().unwrap();
        assert_eq!(loop_edges.len(), 10); // perimeter of 3x2 in unit edges
    }

    #[test]
    fn l_shape_is_simple() {
        // 4x4 minus the 2x2 top-right corner notch.
        let full = GridRegion::from_rect(0, 0, 4, 4);
        let notch = GridRegion::from_rect(2, 2, 2, 2);
        let r = GridRegion::from_cells(full.cells().filter(|c| !notch.contains(*c)));
        assert_eq!(r.area_cells(), 12);
        assert!(r.is_simply_connected());
        assert!(r.boundary_loop().is_ok());
    }

    #[test]
    fn holed_region_rejected() {
        let outer = GridRegion::from_rect(0, 0, 5, 5);
        let donut = GridRegion::from_cells(outer.cells().filter(|&c| c != (2, 2)));
        assert!(!donut.is_simply_connected());
        assert!(donut.boundary_loop().is_err());
    }

    #[test]
    fn pinched_region_rejected() {
        let r = GridRegion::from_cells([(0, 0), (1, 1)]);
        assert!(r.boundary_loop().is_err());
    }

    #[test]
    fn shoelace_matches_rect() {
        let poly = [[0.0, 0.0], [4.0, 0.0], [4.0, 2.0], [0.0, 2.0]];
        assert_eq!(polygon_area(&poly), 8.0);
        let c = polygon_centroid(&poly);
        assert!((c[0] - 2.0).abs() < 1e-12 && (c[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn point_in_l_shape() {
        let poly = [
            [0.0, 0.0],
            [4.0, 0.0],
            [4.0, 2.0],
            [2.0, 2.0],
            [2.0, 4.0],
            [0.0, 4.0],
        ];
        assert!(point_in_polygon([1.0, 1.0], &poly));
        assert!(point_in_polygon([1.0, 3.0], &poly));
        assert!(!point_in_polygon([3.0, 3.0], &poly));
        assert!(!point_in_polygon([5.0, 1.0], &poly));
    }

    #[test]
    fn obb_separation_and_overlap() {
        let a = Obb::new([0.0, 0.0], [0.5, 0.5], 0.0);
        let b = Obb::new([3.0, 0.0], [0.5, 0.5], 0.0);
        assert!(!a.overlaps_beyond(&b, 0.001));
        let c = Obb::new([0.0, 0.0], [0.5, 0.5], 0.3);
        assert!(a.overlaps_beyond(&c, 0.001));
        // Abutting boxes touch exactly: not an overlap.
        let d = Obb::new([1.0, 0.0], [0.5, 0.5], 0.0);
        assert!(!a.overlaps_beyond(&d, 0.001));
        assert!((a.penetration(&d)).abs() < 1e-12);
    }

    #[test]
    fn rotated_obb_penetration_is_symmetric() {
        let a = Obb::new([0.0, 0.0], [1.0, 0.3], 0.7);
        let b = Obb::new([0.4, 0.2], [0.5, 0.5], 2.1);
        assert!((a.penetration(&b) - b.penetration(&a)).abs() < 1e-12);
    }

    #[test]
    fn containment_rejects_notch_spanning_rect() {
        let poly = [
            [0.0, 0.0],
            [4.0, 0.0],
            [4.0, 2.0],
            [2.0, 2.0],
            [2.0, 4.0],
            [0.0, 4.0],
        ];
        // Tall rect inside the left arm: fine.
        let ok = Obb::new([1.0, 2.0], [0.8, 1.8], 0.0);
        assert!(ok.contained_in_polygon(&poly, 1e-6));
        // Thin diagonal sliver whose four corners all sit inside the two
        // arms but whose body clips the notch corner at (2, 2).
        let bad = Obb::new([2.0, 2.0], [1.8, 0.05], -std::f64::consts::FRAC_PI_4);
        for corner in bad.corners() {
            assert!(point_in_polygon(corner, &poly));
        }
        assert!(!bad.contained_in_polygon(&poly, 1e-6));
    }

    #[test]
    fn yaw_normalization() {
        let tau = std::f64::consts::TAU;
        assert_eq!(normalize_yaw(0.0), 0.0);
        assert!((normalize_yaw(tau + 1.0) - 1.0).abs() < 1e-12);
        assert!(normalize_yaw(-0.5) >= 0.0);
        assert!(normalize_yaw(-1e-18) < tau);
    }
}
