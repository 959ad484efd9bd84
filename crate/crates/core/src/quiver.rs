//! Coloured quivers and their mutation.
//!
//! A coloured quiver has arrows carrying a colour in `0..=m`. Valid quivers
//! have no loops, at most one colour per ordered vertex pair, and satisfy the
//! symmetry condition: `r` arrows `i -> j` of colour `c` force `r` arrows
//! `j -> i` of colour `m - c`. Arrows are stored as a full table, both
//! directions explicitly; the validator enforces symmetry rather than deriving
//! one half from the other.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Colour-and-multiplicity payload of one ordered vertex pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub colour: u32,
    pub mult: u32,
}

/// A quiver with coloured arrows. Possibly-invalid states are representable
/// (so that external input can be diagnosed); operations that require
/// validity check it and report [`QuiverError::Invalid`] otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredQuiver {
    m: u32,
    vertex_count: usize,
    table: Vec<Option<Arrow>>, // row-major: index = from * vertex_count + to
}

/// One defect found by [`ColouredQuiver::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Loop { vertex: usize },
    ColourOutOfRange { from: usize, to: usize, colour: u32 },
    ZeroMultiplicity { from: usize, to: usize },
    BrokenSymmetry { from: usize, to: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            Violation::ColourOutOfRange { from, to, colour } => {
                write!(f, "arrow {from} -> {to} has colour {colour} out of range")
            }
            Violation::ZeroMultiplicity { from, to } => {
                write!(f, "arrow {from} -> {to} has zero multiplicity")
            }
            Violation::BrokenSymmetry { from, to } => write!(
                f,
                "arrows between {from} and {to} break the colour symmetry"
            ),
        }
    }
}

/// Outcome of validation: empty means the quiver is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("invalid quiver: {0}")]
    Invalid(ValidationReport),
    #[error("vertex index {index} out of range for a quiver with {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },
    #[error(
        "mutation produced {colours} distinct colours between vertices {from} and {to}; \
         cancellation is only defined for at most two"
    )]
    CancellationAmbiguity { from: usize, to: usize, colours: usize },
    #[error("mutation produced an invalid quiver ({0}); this is an internal bug")]
    InternalInvariant(ValidationReport),
    #[error("duplicate arrow entry for vertex pair ({from}, {to})")]
    DuplicateArrow { from: usize, to: usize },
}

/// Opaque isomorphism-class fingerprint: two valid quivers get equal keys
/// exactly when some vertex relabelling maps one onto the other.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalQuiverKey(Vec<u8>);

impl CanonicalQuiverKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// The colour-0 subquiver, as a plain directed multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GabrielQuiver {
    pub vertex_count: usize,
    /// Sorted (from, to, multiplicity) triples.
    pub arrows: Vec<(usize, usize, u32)>,
}

impl ColouredQuiver {
    /// An arrowless quiver on `vertex_count` vertices with colour modulus `m`.
    pub fn new(m: u32, vertex_count: usize) -> Self {
        ColouredQuiver {
            m,
            vertex_count,
            table: vec![None; vertex_count * vertex_count],
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrow(&self, from: usize, to: usize) -> Option<Arrow> {
        self.table[from * self.vertex_count + to]
    }

    /// Sets the arrow on an ordered pair, replacing any previous one. Permits
    /// states the validator will reject (loops, broken symmetry).
    pub fn set_arrow(&mut self, from: usize, to: usize, colour: u32, mult: u32) {
        self.table[from * self.vertex_count + to] = Some(Arrow { colour, mult });
    }

    pub fn clear_arrow(&mut self, from: usize, to: usize) {
        self.table[from * self.vertex_count + to] = None;
    }

    /// Sets the symmetric pair `from -> to` colour `c` and `to -> from`
    /// colour `m - c`, both with the given multiplicity.
    pub fn set_arrow_pair(&mut self, from: usize, to: usize, colour: u32, mult: u32) {
        self.set_arrow(from, to, colour, mult);
        self.set_arrow(to, from, self.m - colour, mult);
    }

    /// All stored arrows as (from, to, arrow), row-major order.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, Arrow)> + '_ {
        let n = self.vertex_count;
        self.table
            .iter()
            .enumerate()
            .filter_map(move |(idx, a)| a.map(|a| (idx / n, idx % n, a)))
    }

    /// Checks all structural properties; never aborts, collects every defect.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.vertex_count;
        for v in 0..n {
            if self.arrow(v, v).is_some() {
                violations.push(Violation::Loop { vertex: v });
            }
        }
        for from in 0..n {
            for to in 0..n {
                if from == to {
                    continue;
                }
                let Some(a) = self.arrow(from, to) else {
                    continue;
                };
                if a.colour > self.m {
                    violations.push(Violation::ColourOutOfRange {
                        from,
                        to,
                        colour: a.colour,
                    });
                }
                if a.mult == 0 {
                    violations.push(Violation::ZeroMultiplicity { from, to });
                }
                // the reverse arrow must exist with complementary colour and
                // the same multiplicity (reported once per unordered pair)
                if from < to {
                    let ok = a.colour <= self.m
                        && self.arrow(to, from).is_some_and(|b| {
                            b.colour == self.m - a.colour && b.mult == a.mult
                        });
                    if !ok {
                        violations.push(Violation::BrokenSymmetry { from, to });
                    }
                } else if self.arrow(to, from).is_none() {
                    violations.push(Violation::BrokenSymmetry { from: to, to: from });
                }
            }
        }
        ValidationReport { violations }
    }

    fn ensure_valid(&self) -> Result<(), QuiverError> {
        let report = self.validate();
        if report.is_ok() {
            Ok(())
        } else {
            Err(QuiverError::Invalid(report))
        }
    }

    /// Mutation at vertex `j`, in three steps:
    ///
    /// 1. for every pair of arrows `i -> j` (colour c, multiplicity r) and
    ///    `j -> k` (colour m, multiplicity r') with `i != k` — equivalently,
    ///    `k -> j` of colour 0 — add r·r' arrows `i -> k` of colour c and
    ///    r·r' arrows `k -> i` of colour m − c;
    /// 2. on each ordered pair, cancel the two present colours against each
    ///    other (reduce both counts by the smaller) until at most one colour
    ///    remains — more than two distinct colours is reported as an error;
    /// 3. colours of arrows into `j` decrease by one and colours of arrows
    ///    out of `j` increase by one, modulo m + 1. This orientation is the
    ///    one that matches diagonal mutation by clockwise rotation when
    ///    colours are counted counterclockwise (see the geometry module).
    pub fn mutate(&self, j: usize) -> Result<ColouredQuiver, QuiverError> {
        self.ensure_valid()?;
        if j >= self.vertex_count {
            return Err(QuiverError::VertexOutOfRange {
                index: j,
                count: self.vertex_count,
            });
        }
        let n = self.vertex_count;
        let modulus = u64::from(self.m) + 1;

        // colour -> count multiset per ordered pair; step 1 can make a pair
        // temporarily carry two colours
        let mut counts: Vec<BTreeMap<u32, u64>> = vec![BTreeMap::new(); n * n];
        for (from, to, a) in self.arrows() {
            counts[from * n + to].insert(a.colour, u64::from(a.mult));
        }

        // step 1
        let incoming: Vec<(usize, Arrow)> = (0..n)
            .filter(|&i| i != j)
            .filter_map(|i| self.arrow(i, j).map(|a| (i, a)))
            .collect();
        let top_out: Vec<(usize, Arrow)> = (0..n)
            .filter(|&k| k != j)
            .filter_map(|k| self.arrow(j, k).map(|a| (k, a)))
            .filter(|(_, a)| a.colour == self.m)
            .collect();
        for &(i, a) in &incoming {
            for &(k, b) in &top_out {
                if i == k {
                    continue;
                }
                let added = u64::from(a.mult) * u64::from(b.mult);
                *counts[i * n + k].entry(a.colour).or_insert(0) += added;
                *counts[k * n + i].entry(self.m - a.colour).or_insert(0) += added;
            }
        }

        // step 2
        for from in 0..n {
            for to in 0..n {
                let slot = &mut counts[from * n + to];
                if slot.len() > 2 {
                    return Err(QuiverError::CancellationAmbiguity {
                        from,
                        to,
                        colours: slot.len(),
                    });
                }
                if slot.len() == 2 {
                    let reduce = slot.values().copied().min().expect("two entries");
                    slot.values_mut().for_each(|r| *r -= reduce);
                    slot.retain(|_, r| *r > 0);
                }
            }
        }

        // step 3
        let mut result = ColouredQuiver::new(self.m, n);
        for from in 0..n {
            for to in 0..n {
                let slot = &counts[from * n + to];
                debug_assert!(slot.len() <= 1);
                let Some((&colour, &mult)) = slot.iter().next() else {
                    continue;
                };
                let colour = if to == j {
                    ((u64::from(colour) + modulus - 1) % modulus) as u32
                } else if from == j {
                    ((u64::from(colour) + 1) % modulus) as u32
                } else {
                    colour
                };
                let mult = u32::try_from(mult).expect("multiplicity fits in u32");
                result.set_arrow(from, to, colour, mult);
            }
        }

        let report = result.validate();
        if report.is_ok() {
            Ok(result)
        } else {
            Err(QuiverError::InternalInvariant(report))
        }
    }

    /// Copy with every colour replaced by its complement `m - c`. This is the
    /// mirror-image convention; useful as a deliberately incompatible quiver
    /// assignment in negative-control checks.
    pub fn mirror_colours(&self) -> ColouredQuiver {
        let mut out = ColouredQuiver::new(self.m, self.vertex_count);
        for (from, to, a) in self.arrows() {
            out.set_arrow(from, to, self.m - a.colour, a.mult);
        }
        out
    }

    /// Copy with vertices renamed by `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> ColouredQuiver {
        assert_eq!(perm.len(), self.vertex_count);
        let mut out = ColouredQuiver::new(self.m, self.vertex_count);
        for (from, to, a) in self.arrows() {
            out.set_arrow(perm[from], perm[to], a.colour, a.mult);
        }
        out
    }

    /// Copy with vertex `v` (and all incident arrows) deleted; the remaining
    /// vertices keep their relative order.
    pub fn remove_vertex(&self, v: usize) -> ColouredQuiver {
        assert!(v < self.vertex_count);
        let map = |w: usize| if w > v { w - 1 } else { w };
        let mut out = ColouredQuiver::new(self.m, self.vertex_count - 1);
        for (from, to, a) in self.arrows() {
            if from != v && to != v {
                out.set_arrow(map(from), map(to), a.colour, a.mult);
            }
        }
        out
    }

    /// The colour-0 subquiver with multiplicities.
    pub fn gabriel_quiver(&self) -> Result<GabrielQuiver, QuiverError> {
        self.ensure_valid()?;
        let arrows = self
            .arrows()
            .filter(|(_, _, a)| a.colour == 0)
            .map(|(from, to, a)| (from, to, a.mult))
            .collect();
        Ok(GabrielQuiver {
            vertex_count: self.vertex_count,
            arrows,
        })
    }

    /// Canonical isomorphism-class key: the lexicographically minimal byte
    /// encoding of the arrow table over vertex relabellings. The search is
    /// restricted to labellings that list the (isomorphism-invariant) vertex
    /// signatures in sorted order, and prunes on encoding prefixes; at the
    /// ranks exercised here (a dozen vertices or fewer) this is fast.
    pub fn canonical_key(&self) -> Result<CanonicalQuiverKey, QuiverError> {
        self.ensure_valid()?;
        let n = self.vertex_count;

        // signature of a vertex: its sorted outgoing (colour, mult) list —
        // incoming arrows are determined by symmetry, so this captures both
        let mut sigs: Vec<Vec<(u32, u32)>> = Vec::with_capacity(n);
        for v in 0..n {
            let mut s: Vec<(u32, u32)> = (0..n)
                .filter_map(|w| self.arrow(v, w).map(|a| (a.colour, a.mult)))
                .collect();
            s.sort_unstable();
            sigs.push(s);
        }
        let mut unique = sigs.clone();
        unique.sort_unstable();
        unique.dedup();
        let sig_id: Vec<usize> = sigs
            .iter()
            .map(|s| unique.binary_search(s).expect("own signature"))
            .collect();
        let mut slot_class: Vec<usize> = sig_id.clone();
        slot_class.sort_unstable();

        let mut search = KeySearch {
            quiver: self,
            sig_id: &sig_id,
            slot_class: &slot_class,
            assigned: Vec::with_capacity(n),
            used: vec![false; n],
            cur: Vec::with_capacity(n * n),
            best: None,
        };
        search.descend();
        let best = search.best.unwrap_or_default();

        let mut bytes = Vec::with_capacity(8 + best.len() * 8);
        bytes.extend_from_slice(&self.m.to_be_bytes());
        bytes.extend_from_slice(&(n as u32).to_be_bytes());
        for cell in best {
            bytes.extend_from_slice(&cell.to_be_bytes());
        }
        Ok(CanonicalQuiverKey(bytes))
    }

    /// Canonical serialisable document, arrows sorted by (from, to).
    pub fn to_doc(&self) -> QuiverDoc {
        QuiverDoc {
            m: self.m,
            vertices: self.vertex_count,
            arrows: self
                .arrows()
                .map(|(from, to, a)| ArrowDoc {
                    from,
                    to,
                    colour: a.colour,
                    mult: a.mult,
                })
                .collect(),
        }
    }

    /// Builds a quiver from an interchange document, rejecting out-of-range
    /// vertices, duplicate ordered pairs, and anything the validator flags.
    pub fn from_doc(doc: &QuiverDoc) -> Result<ColouredQuiver, QuiverError> {
        let mut q = ColouredQuiver::new(doc.m, doc.vertices);
        for arrow in &doc.arrows {
            for index in [arrow.from, arrow.to] {
                if index >= doc.vertices {
                    return Err(QuiverError::VertexOutOfRange {
                        index,
                        count: doc.vertices,
                    });
                }
            }
            if q.arrow(arrow.from, arrow.to).is_some() {
                return Err(QuiverError::DuplicateArrow {
                    from: arrow.from,
                    to: arrow.to,
                });
            }
            q.set_arrow(arrow.from, arrow.to, arrow.colour, arrow.mult);
        }
        q.ensure_valid()?;
        Ok(q)
    }
}

struct KeySearch<'a> {
    quiver: &'a ColouredQuiver,
    sig_id: &'a [usize],
    slot_class: &'a [usize],
    assigned: Vec<usize>,
    used: Vec<bool>,
    cur: Vec<u64>,
    best: Option<Vec<u64>>,
}

fn encode_cell(arrow: Option<Arrow>) -> u64 {
    match arrow {
        None => 0,
        Some(a) => ((u64::from(a.colour) + 1) << 32) | u64::from(a.mult),
    }
}

impl KeySearch<'_> {
    fn descend(&mut self) {
        let t = self.assigned.len();
        let n = self.quiver.vertex_count;
        if t == n {
            if self.best.as_ref().is_none_or(|b| self.cur < *b) {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.sig_id[v] != self.slot_class[t] {
                continue;
            }
            let start = self.cur.len();
            // staircase order: placing slot t reveals exactly the pairs
            // between t and the earlier slots
            for s in 0..t {
                self.cur.push(encode_cell(self.quiver.arrow(self.assigned[s], v)));
                self.cur.push(encode_cell(self.quiver.arrow(v, self.assigned[s])));
            }
            let viable = self
                .best
                .as_ref()
                .is_none_or(|b| self.cur.as_slice() <= &b[..self.cur.len()]);
            if viable {
                self.assigned.push(v);
                self.used[v] = true;
                self.descend();
                self.used[v] = false;
                self.assigned.pop();
            }
            self.cur.truncate(start);
        }
    }
}

/// JSON interchange form of a quiver:
/// `{"m": 3, "vertices": 3, "arrows": [{"from": 0, "to": 1, "colour": 0, "mult": 1}, ...]}`
/// with 0-based vertex indices and every arrow listed explicitly.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverDoc {
    pub m: u32,
    pub vertices: usize,
    pub arrows: Vec<ArrowDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowDoc {
    pub from: usize,
    pub to: usize,
    pub colour: u32,
    pub mult: u32,
}
