//! Polygon dissections that model the quivers.
//!
//! A polygon with `N*m + 2` vertices, labelled `1..=N*m+2` clockwise, can be
//! cut by `N - 1` pairwise non-crossing m-diagonals into `N` cells of `m + 2`
//! sides each. Such dissections ("angulations") are the geometric model:
//! every angulation induces a coloured quiver on its diagonals, rotating one
//! diagonal clockwise inside the two cells it bounds corresponds to quiver
//! mutation, and counting angulations up to polygon rotation counts quiver
//! mutation classes.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::counting::Count;
use crate::quiver::ColouredQuiver;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("invalid polygon parameters: {0}")]
    InvalidParams(String),
    #[error("label {label} out of range 1..={vertex_count}")]
    LabelOutOfRange { label: u32, vertex_count: u32 },
    #[error("degenerate diagonal from label {label} to itself")]
    DegenerateDiagonal { label: u32 },
    #[error("{diagonal} is not an m-diagonal of this polygon")]
    NotAnMDiagonal { diagonal: MDiagonal },
    #[error("expected {expected} diagonals, got {got}")]
    WrongDiagonalCount { expected: usize, got: usize },
    #[error("duplicate diagonal {diagonal}")]
    DuplicateDiagonal { diagonal: MDiagonal },
    #[error("diagonals {first} and {second} cross")]
    CrossingDiagonals { first: MDiagonal, second: MDiagonal },
    #[error("diagonal {diagonal} is not part of this angulation")]
    DiagonalNotPresent { diagonal: MDiagonal },
    #[error("diagonal {diagonal} does not cut off a single cell at the border")]
    NotCloseToBorder { diagonal: MDiagonal },
    #[error("({a}, {b}) is not a border edge of this polygon")]
    NotABorderEdge { a: u32, b: u32 },
    #[error("cannot parse angulation: {0}")]
    Parse(String),
}

/// Size parameters of the polygon: `cells` (often written N) is the number
/// of cells any angulation has, `m + 2` the number of sides per cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolygonParams {
    cells: u32,
    m: u32,
}

impl PolygonParams {
    pub fn new(cells: u32, m: u32) -> Result<Self, GeometryError> {
        if cells == 0 || m == 0 {
            return Err(GeometryError::InvalidParams(format!(
                "cells and m must be positive (got cells={cells}, m={m})"
            )));
        }
        cells
            .checked_mul(m)
            .and_then(|p| p.checked_add(2))
            .ok_or_else(|| {
                GeometryError::InvalidParams(format!(
                    "vertex count overflows for cells={cells}, m={m}"
                ))
            })?;
        Ok(PolygonParams { cells, m })
    }

    pub fn cells(&self) -> u32 {
        self.cells
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of polygon vertices, `cells * m + 2`.
    pub fn vertex_count(&self) -> u32 {
        self.cells * self.m + 2
    }

    /// How many m-diagonals the polygon has in total:
    /// `(cells - 1) * (cells * m + 2) / 2`.
    pub fn count_m_diagonals(&self) -> Count {
        // one factor is always even, so the halving is exact
        Count::from(u64::from(self.cells - 1)) * Count::from(u64::from(self.vertex_count()))
            / 2u32
    }

    fn check_label(&self, label: u32) -> Result<(), GeometryError> {
        if label == 0 || label > self.vertex_count() {
            Err(GeometryError::LabelOutOfRange {
                label,
                vertex_count: self.vertex_count(),
            })
        } else {
            Ok(())
        }
    }
}

/// A chord `{a, b}` of the polygon with `a < b`. Only construction is
/// validated here; whether it is an m-diagonal of a concrete polygon is
/// checked by [`is_m_diagonal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MDiagonal {
    a: u32,
    b: u32,
}

impl MDiagonal {
    pub fn new(i: u32, j: u32) -> Result<Self, GeometryError> {
        if i == j {
            return Err(GeometryError::DegenerateDiagonal { label: i });
        }
        Ok(MDiagonal {
            a: i.min(j),
            b: i.max(j),
        })
    }

    pub fn endpoints(&self) -> (u32, u32) {
        (self.a, self.b)
    }
}

impl fmt::Display for MDiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Whether the chord `i`-`j` cuts the polygon into two pieces that can both
/// be angulated, i.e. whether `|j - i| = km + 1` with both sides at least one
/// cell. Border edges and wrong-gap chords give `Ok(false)`; out-of-range or
/// equal labels are errors.
pub fn is_m_diagonal(params: &PolygonParams, i: u32, j: u32) -> Result<bool, GeometryError> {
    params.check_label(i)?;
    params.check_label(j)?;
    if i == j {
        return Err(GeometryError::DegenerateDiagonal { label: i });
    }
    let m = params.m;
    let v = params.vertex_count();
    let gap = i.max(j) - i.min(j);
    Ok((gap - 1).is_multiple_of(m) && gap > m && gap + m < v)
}

/// Every m-diagonal of the polygon, sorted.
pub fn all_m_diagonals(params: &PolygonParams) -> Vec<MDiagonal> {
    let v = params.vertex_count();
    let mut out = Vec::new();
    for a in 1..=v {
        for b in (a + 1)..=v {
            if is_m_diagonal(params, a, b).expect("labels in range") {
                out.push(MDiagonal { a, b });
            }
        }
    }
    out
}

/// All border edges `(x, x+1)` plus the wrap-around edge `(V, 1)`, in
/// clockwise order.
pub fn border_edges(params: &PolygonParams) -> Vec<(u32, u32)> {
    let v = params.vertex_count();
    let mut out: Vec<(u32, u32)> = (1..v).map(|x| (x, x + 1)).collect();
    out.push((v, 1));
    out
}

fn crosses(d1: MDiagonal, d2: MDiagonal) -> bool {
    if d1.a == d2.a || d1.a == d2.b || d1.b == d2.a || d1.b == d2.b {
        return false;
    }
    let inside = |x: u32| d1.a < x && x < d1.b;
    inside(d2.a) != inside(d2.b)
}

/// Opaque key identifying an angulation up to rotation of the polygon: equal
/// keys exactly when some power of the rotation maps one onto the other.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RotationClassKey(Vec<u8>);

impl RotationClassKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Minimal encoding of a diagonal set over all rotations of the polygon.
fn minimal_rotation_encoding(params: &PolygonParams, pairs: &[(u32, u32)]) -> Vec<u8> {
    let v = params.vertex_count();
    let mut best: Option<Vec<(u32, u32)>> = None;
    for rot in 0..v {
        let mut mapped: Vec<(u32, u32)> = pairs
            .iter()
            .map(|&(a, b)| {
                let a = (a - 1 + v - rot) % v + 1;
                let b = (b - 1 + v - rot) % v + 1;
                (a.min(b), a.max(b))
            })
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| mapped < *b) {
            best = Some(mapped);
        }
    }
    let best = best.unwrap_or_default();
    let mut bytes = Vec::with_capacity(8 + best.len() * 8);
    bytes.extend_from_slice(&v.to_be_bytes());
    bytes.extend_from_slice(&params.m.to_be_bytes());
    for (a, b) in best {
        bytes.extend_from_slice(&a.to_be_bytes());
        bytes.extend_from_slice(&b.to_be_bytes());
    }
    bytes
}

/// A maximal set of pairwise non-crossing m-diagonals, together with the
/// cells they cut the polygon into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Angulation {
    params: PolygonParams,
    diagonals: Vec<MDiagonal>,
    cells: Vec<Vec<u32>>,
}

impl Angulation {
    pub fn new(
        params: PolygonParams,
        mut diagonals: Vec<MDiagonal>,
    ) -> Result<Self, GeometryError> {
        diagonals.sort_unstable();
        for d in &diagonals {
            if !is_m_diagonal(&params, d.a, d.b)? {
                return Err(GeometryError::NotAnMDiagonal { diagonal: *d });
            }
        }
        for w in diagonals.windows(2) {
            if w[0] == w[1] {
                return Err(GeometryError::DuplicateDiagonal { diagonal: w[0] });
            }
        }
        for (i, &d1) in diagonals.iter().enumerate() {
            for &d2 in &diagonals[i + 1..] {
                if crosses(d1, d2) {
                    return Err(GeometryError::CrossingDiagonals {
                        first: d1,
                        second: d2,
                    });
                }
            }
        }
        let expected = params.cells as usize - 1;
        if diagonals.len() != expected {
            return Err(GeometryError::WrongDiagonalCount {
                expected,
                got: diagonals.len(),
            });
        }
        let cells = compute_cells(&params, &diagonals);
        Ok(Angulation {
            params,
            diagonals,
            cells,
        })
    }

    pub fn params(&self) -> PolygonParams {
        self.params
    }

    /// The diagonals in sorted order. Their indices in this list are the
    /// vertex indices of the induced quiver.
    pub fn diagonals(&self) -> &[MDiagonal] {
        &self.diagonals
    }

    /// The cells, each as a sorted list of corner labels (which, labels
    /// running clockwise, is also their clockwise cyclic order).
    pub fn cells(&self) -> &[Vec<u32>] {
        &self.cells
    }

    pub fn diagonal_index(&self, d: MDiagonal) -> Option<usize> {
        self.diagonals.binary_search(&d).ok()
    }

    /// Image under the rotation `v -> v - 1` (and `1 -> V`).
    pub fn rotate(&self) -> Angulation {
        let v = self.params.vertex_count();
        let rot = |x: u32| if x == 1 { v } else { x - 1 };
        let diagonals = self
            .diagonals
            .iter()
            .map(|d| MDiagonal::new(rot(d.a), rot(d.b)).expect("rotation keeps labels distinct"))
            .collect();
        Angulation::new(self.params, diagonals).expect("rotation preserves validity")
    }

    pub fn rotation_class_key(&self) -> RotationClassKey {
        let pairs: Vec<(u32, u32)> = self.diagonals.iter().map(|d| (d.a, d.b)).collect();
        RotationClassKey(minimal_rotation_encoding(&self.params, &pairs))
    }

    /// Replaces `d` by the diagonal obtained by rotating it one corner
    /// clockwise inside the (2m+2)-gon formed by the two cells adjacent to
    /// `d`. Applying this m+1 times returns to the original angulation.
    pub fn mutate_at(&self, d: MDiagonal) -> Result<(Angulation, MDiagonal), GeometryError> {
        let Some(index) = self.diagonal_index(d) else {
            return Err(GeometryError::DiagonalNotPresent { diagonal: d });
        };
        let adjacent: Vec<&Vec<u32>> = self
            .cells
            .iter()
            .filter(|cell| {
                cell.binary_search(&d.a).is_ok() && cell.binary_search(&d.b).is_ok()
            })
            .collect();
        assert_eq!(adjacent.len(), 2, "a diagonal bounds exactly two cells");
        let mut merged: Vec<u32> = adjacent[0].iter().chain(adjacent[1].iter()).copied().collect();
        merged.sort_unstable();
        merged.dedup();
        let len = 2 * self.params.m as usize + 2;
        assert_eq!(merged.len(), len, "adjacent cells share exactly one edge");
        let p = merged.binary_search(&d.a).expect("endpoint in merged cell");
        let q = merged.binary_search(&d.b).expect("endpoint in merged cell");
        assert_eq!(q - p, self.params.m as usize + 1, "endpoints are antipodal");
        let replacement = MDiagonal::new(
            merged[(p + 1) % len],
            merged[(p + self.params.m as usize + 2) % len],
        )
        .expect("antipodal corners are distinct");
        let mut diagonals = self.diagonals.clone();
        diagonals[index] = replacement;
        let next =
            Angulation::new(self.params, diagonals).expect("mutation preserves validity");
        Ok((next, replacement))
    }

    /// The coloured quiver on the diagonals (vertex i = i-th diagonal in
    /// sorted order). Two diagonals are joined when they bound a common
    /// cell; the colour of the arrow from one to the other is the number of
    /// cell sides strictly between them, counted counterclockwise from the
    /// source.
    pub fn quiver_of(&self) -> ColouredQuiver {
        let k = self.params.m as usize + 2;
        let mut q = ColouredQuiver::new(self.params.m, self.diagonals.len());
        for cell in &self.cells {
            let sides: Vec<Option<usize>> = (0..k)
                .map(|i| {
                    let u = cell[i];
                    let w = cell[(i + 1) % k];
                    self.diagonals
                        .binary_search(&MDiagonal {
                            a: u.min(w),
                            b: u.max(w),
                        })
                        .ok()
                })
                .collect();
            for (i, &si) in sides.iter().enumerate() {
                let Some(di) = si else { continue };
                for (j, &sj) in sides.iter().enumerate().skip(i + 1) {
                    let Some(dj) = sj else { continue };
                    q.set_arrow(di, dj, ((i + k - j - 1) % k) as u32, 1);
                    q.set_arrow(dj, di, ((j + k - i - 1) % k) as u32, 1);
                }
            }
        }
        debug_assert!(q.validate().is_ok());
        q
    }

    /// Deletes the single cell that `d` cuts off at the border, yielding an
    /// angulation with one cell fewer. The surviving labels are compacted
    /// (order preserved); `d` itself becomes a border edge and disappears.
    pub fn factor_out(&self, d: MDiagonal) -> Result<Angulation, GeometryError> {
        if self.diagonal_index(d).is_none() {
            return Err(GeometryError::DiagonalNotPresent { diagonal: d });
        }
        let m = self.params.m;
        let v = self.params.vertex_count();
        let gap = d.b - d.a;
        let map: Box<dyn Fn(u32) -> u32> = if gap == m + 1 {
            // the cut-off cell is a+1..b-1 plus the endpoints
            Box::new(move |x| if x >= d.b { x - m } else { x })
        } else if v - gap == m + 1 {
            // the cut-off cell wraps around: b..V plus 1..a
            Box::new(move |x| x - (d.a - 1))
        } else {
            return Err(GeometryError::NotCloseToBorder { diagonal: d });
        };
        let keep = |x: u32| {
            if gap == m + 1 {
                !(x > d.a && x < d.b)
            } else {
                x >= d.a && x <= d.b
            }
        };
        let diagonals = self
            .diagonals
            .iter()
            .filter(|&&other| other != d)
            .map(|other| {
                debug_assert!(keep(other.a) && keep(other.b));
                MDiagonal::new(map(other.a), map(other.b)).expect("mapping keeps labels distinct")
            })
            .collect();
        let params = PolygonParams::new(self.params.cells - 1, m)?;
        Ok(Angulation::new(params, diagonals).expect("factoring preserves validity"))
    }

    /// Inverse of [`factor_out`](Self::factor_out): glues a fresh cell onto
    /// the border edge `(x, x+1)` (or the wrap-around edge `(V, 1)`),
    /// inserting m new polygon vertices there. Returns the extended
    /// angulation and the diagonal that now separates the new cell.
    pub fn extend_at(&self, edge: (u32, u32)) -> Result<(Angulation, MDiagonal), GeometryError> {
        let m = self.params.m;
        let v = self.params.vertex_count();
        self.params.check_label(edge.0)?;
        self.params.check_label(edge.1)?;
        let (lo, hi) = (edge.0.min(edge.1), edge.0.max(edge.1));
        let params = PolygonParams::new(self.params.cells + 1, m)?;
        let (mut diagonals, new_diagonal): (Vec<MDiagonal>, MDiagonal) = if lo == 1 && hi == v {
            // wrap-around edge: new vertices get the labels V+1..V+m
            let new_diagonal = MDiagonal { a: 1, b: v };
            (self.diagonals.clone(), new_diagonal)
        } else if hi == lo + 1 {
            let shift = |x: u32| if x > lo { x + m } else { x };
            let diagonals = self
                .diagonals
                .iter()
                .map(|d| MDiagonal {
                    a: shift(d.a),
                    b: shift(d.b),
                })
                .collect();
            (diagonals, MDiagonal { a: lo, b: lo + m + 1 })
        } else {
            return Err(GeometryError::NotABorderEdge {
                a: edge.0,
                b: edge.1,
            });
        };
        diagonals.push(new_diagonal);
        let next = Angulation::new(params, diagonals).expect("extension preserves validity");
        Ok((next, new_diagonal))
    }

    /// All triples (alpha, beta, gamma) of diagonals of one common cell such
    /// that the arrows alpha -> beta and beta -> gamma both have colour 0,
    /// i.e. the positions of gamma, beta, alpha are consecutive sides of the
    /// cell. Sorted.
    pub fn relations(&self) -> Vec<[MDiagonal; 3]> {
        let k = self.params.m as usize + 2;
        let mut out = Vec::new();
        for cell in &self.cells {
            let sides: Vec<Option<MDiagonal>> = (0..k)
                .map(|i| {
                    let u = cell[i];
                    let w = cell[(i + 1) % k];
                    let d = MDiagonal {
                        a: u.min(w),
                        b: u.max(w),
                    };
                    self.diagonals.binary_search(&d).ok().map(|_| d)
                })
                .collect();
            for b in 0..k {
                let (prev, next) = ((b + k - 1) % k, (b + 1) % k);
                if let (Some(alpha), Some(beta), Some(gamma)) =
                    (sides[next], sides[b], sides[prev])
                {
                    out.push([alpha, beta, gamma]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Compact one-line form, e.g. `"1-4,1-6"`; empty for the one-cell
    /// polygon.
    pub fn to_compact(&self) -> String {
        let parts: Vec<String> = self.diagonals.iter().map(|d| d.to_string()).collect();
        parts.join(",")
    }

    pub fn parse_compact(params: PolygonParams, text: &str) -> Result<Angulation, GeometryError> {
        let mut diagonals = Vec::new();
        if !text.trim().is_empty() {
            for part in text.split(',') {
                let part = part.trim();
                let (a, b) = part.split_once('-').ok_or_else(|| {
                    GeometryError::Parse(format!("expected \"a-b\", got {part:?}"))
                })?;
                let a: u32 = a.trim().parse().map_err(|_| {
                    GeometryError::Parse(format!("bad label {:?} in {part:?}", a.trim()))
                })?;
                let b: u32 = b.trim().parse().map_err(|_| {
                    GeometryError::Parse(format!("bad label {:?} in {part:?}", b.trim()))
                })?;
                diagonals.push(MDiagonal::new(a, b)?);
            }
        }
        Angulation::new(params, diagonals)
    }

    pub fn to_doc(&self) -> AngulationDoc {
        AngulationDoc {
            n: self.params.cells,
            m: self.params.m,
            diagonals: self.diagonals.iter().map(|d| [d.a, d.b]).collect(),
        }
    }

    pub fn from_doc(doc: &AngulationDoc) -> Result<Angulation, GeometryError> {
        let params = PolygonParams::new(doc.n, doc.m)?;
        let diagonals = doc
            .diagonals
            .iter()
            .map(|&[a, b]| MDiagonal::new(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        Angulation::new(params, diagonals)
    }
}

/// Splits the polygon along the diagonals; every piece of a full, valid
/// angulation necessarily has m + 2 corners.
fn compute_cells(params: &PolygonParams, diagonals: &[MDiagonal]) -> Vec<Vec<u32>> {
    let v = params.vertex_count();
    let mut cells = Vec::with_capacity(params.cells as usize);
    let mut regions: Vec<Vec<u32>> = vec![(1..=v).collect()];
    while let Some(region) = regions.pop() {
        let splitter = diagonals.iter().find_map(|d| {
            let ia = region.binary_search(&d.a).ok()?;
            let ib = region.binary_search(&d.b).ok()?;
            let adjacent = ib - ia == 1 || (ia == 0 && ib == region.len() - 1);
            (!adjacent).then_some((ia, ib))
        });
        match splitter {
            Some((ia, ib)) => {
                regions.push(region[ia..=ib].to_vec());
                let mut outer = region[..=ia].to_vec();
                outer.extend_from_slice(&region[ib..]);
                regions.push(outer);
            }
            None => {
                assert_eq!(
                    region.len(),
                    params.m as usize + 2,
                    "every cell of a valid angulation has m + 2 corners"
                );
                cells.push(region);
            }
        }
    }
    cells.sort_unstable();
    assert_eq!(cells.len(), params.cells as usize);
    cells
}

/// JSON interchange form of an angulation:
/// `{"N": 3, "m": 2, "diagonals": [[1, 4], [1, 6]]}` with 1-based labels.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AngulationDoc {
    #[serde(rename = "N")]
    pub n: u32,
    pub m: u32,
    pub diagonals: Vec<[u32; 2]>,
}

/// The fan: all diagonals hanging off vertex 1 (`{1, km+2}` for each k).
/// Its quiver is the linear one with all arrows of colour 0 pointing away
/// from low indices.
pub fn fan_angulation(params: &PolygonParams) -> Angulation {
    let diagonals = (1..params.cells)
        .map(|k| MDiagonal {
            a: 1,
            b: k * params.m + 2,
        })
        .collect();
    Angulation::new(*params, diagonals).expect("the fan is a valid angulation")
}

struct Enumerator<F: FnMut(&[(u32, u32)])> {
    m: usize,
    regions: Vec<Vec<u32>>,
    diags: Vec<(u32, u32)>,
    f: F,
}

impl<F: FnMut(&[(u32, u32)])> Enumerator<F> {
    /// Angulates the top region of the worklist in all possible ways; when
    /// the worklist is empty a complete angulation has been assembled.
    /// Restores the worklist before returning.
    fn drive(&mut self) {
        let Some(region) = self.regions.pop() else {
            (self.f)(&self.diags);
            return;
        };
        debug_assert!(region.len() >= self.m + 2 && (region.len() - 2) % self.m == 0);
        let mut positions = vec![0usize; self.m];
        self.choose(&region, &mut positions, 0);
        self.regions.push(region);
    }

    /// Picks the corners of the cell containing the region's root edge
    /// (its first two corners): positions 0, 1 and m more chosen here.
    /// Each consecutive gap must enclose an angulatable piece, so positions
    /// step by m.
    fn choose(&mut self, region: &[u32], positions: &mut [usize], i: usize) {
        let k = region.len();
        if i == positions.len() {
            let regions_before = self.regions.len();
            let diags_before = self.diags.len();
            let mut prev = 1usize;
            for &p in positions.iter() {
                if p > prev + 1 {
                    self.diags
                        .push((region[prev].min(region[p]), region[prev].max(region[p])));
                    self.regions.push(region[prev..=p].to_vec());
                }
                prev = p;
            }
            if prev < k - 1 {
                self.diags
                    .push((region[0].min(region[prev]), region[0].max(region[prev])));
                let mut wrap = region[prev..].to_vec();
                wrap.push(region[0]);
                self.regions.push(wrap);
            }
            self.drive();
            self.regions.truncate(regions_before);
            self.diags.truncate(diags_before);
            return;
        }
        let prev = if i == 0 { 1 } else { positions[i - 1] };
        let remaining = positions.len() - 1 - i;
        let mut p = prev + 1;
        while p + remaining < k {
            positions[i] = p;
            self.choose(region, positions, i + 1);
            p += self.m;
        }
    }
}

/// Visits the diagonal set of every angulation exactly once. The slice
/// passed to the callback is unsorted and only valid during the call.
pub fn for_each_diagonal_set(params: &PolygonParams, f: impl FnMut(&[(u32, u32)])) {
    let v = params.vertex_count();
    let mut e = Enumerator {
        m: params.m as usize,
        regions: vec![(1..=v).collect()],
        diags: Vec::new(),
        f,
    };
    e.drive();
}

/// Visits every angulation exactly once, in no particular order.
pub fn for_each_angulation(params: &PolygonParams, mut f: impl FnMut(&Angulation)) {
    for_each_diagonal_set(params, |pairs| {
        let diagonals = pairs
            .iter()
            .map(|&(a, b)| MDiagonal { a, b })
            .collect();
        let angulation =
            Angulation::new(*params, diagonals).expect("enumerated sets are valid angulations");
        f(&angulation);
    });
}

pub fn count_angulations(params: &PolygonParams) -> u64 {
    let mut count = 0u64;
    for_each_diagonal_set(params, |_| count += 1);
    count
}

pub fn angulations(params: &PolygonParams) -> Vec<Angulation> {
    let mut out = Vec::new();
    for_each_angulation(params, |a| out.push(a.clone()));
    out
}

/// Number of angulations up to rotation of the polygon.
pub fn count_rotation_classes(params: &PolygonParams) -> u64 {
    let mut keys: HashSet<Vec<u8>> = HashSet::new();
    for_each_diagonal_set(params, |pairs| {
        keys.insert(minimal_rotation_encoding(params, pairs));
    });
    keys.len() as u64
}

/// One angulation per rotation class, ordered by class key.
pub fn rotation_class_representatives(params: &PolygonParams) -> Vec<Angulation> {
    let mut reps: std::collections::BTreeMap<Vec<u8>, Vec<(u32, u32)>> =
        std::collections::BTreeMap::new();
    for_each_diagonal_set(params, |pairs| {
        reps.entry(minimal_rotation_encoding(params, pairs))
            .or_insert_with(|| pairs.to_vec());
    });
    reps.into_values()
        .map(|pairs| {
            let diagonals = pairs.into_iter().map(|(a, b)| MDiagonal { a, b }).collect();
            Angulation::new(*params, diagonals).expect("representatives are valid")
        })
        .collect()
}
