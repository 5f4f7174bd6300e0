//! Oriented link diagrams as PD codes, their region (face) structure, and
//! the crossing records driving region colorings.
//!
//! A crossing `X[a,b,c,d]` lists its four incident edge labels in
//! counterclockwise order starting from the incoming under-strand, the
//! standard planar-diagram convention. Edges are numbered consecutively
//! along each component, which encodes the orientation. Slots are indexed
//! 0..4 in tuple order; geometrically we picture slot 0 (the incoming
//! under-edge) at the south, then east, north, west. Corner k of a crossing
//! is the region wedged between slots k and k+1.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("PD parse error: {0}")]
    Parse(String),
    #[error("edge label {label} appears {count} times, expected exactly 2")]
    LabelCount { label: u32, count: usize },
    #[error("edge labels are not 1..={max}")]
    NonContiguousLabels { max: u32 },
    #[error("edge labels along a component are not cyclically consecutive (component containing edge {edge})")]
    ComponentNotConsecutive { edge: u32 },
    #[error("crossing {crossing}: under-strand edges {a}->{c} do not follow the orientation")]
    MisorientedUnder { crossing: usize, a: u32, c: u32 },
    #[error("crossing {crossing}: over-strand edges are not consistently orientable")]
    InconsistentOver { crossing: usize },
    #[error("diagram is split (disconnected); split links are not supported")]
    Split,
    #[error("region count violates the Euler formula; the code does not describe a planar diagram")]
    NonPlanar,
    #[error("edge {0} does not exist in the diagram")]
    InvalidSite(u32),
    #[error("move not applicable: {0}")]
    MoveNotApplicable(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReidemeisterMove {
    R1Plus,
    R1Minus,
    R2,
}

/// Parsed oriented link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<[u32; 4]>,
    edge_count: u32,
    /// Inclusive edge-label ranges, one per component.
    components: Vec<(u32, u32)>,
    /// Per crossing, the slot (1 or 3) holding the incoming over-edge.
    over_in_slot: Vec<u8>,
}

/// Region structure of a diagram: a count plus, for every crossing, the
/// region index at each of its four corners.
/// (region count, corner regions per crossing, side regions per edge).
type FaceData = (usize, Vec<[usize; 4]>, Vec<[usize; 2]>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regions {
    pub region_count: usize,
    /// corner_region[c][k] = region at corner k of crossing c.
    pub corner_region: Vec<[usize; 4]>,
}

/// One crossing of the region dual graph: the relation carried is always
/// `y = x ∗ (a · b)` with x = star_in, a = dot_left, b = dot_right,
/// y = star_out, plus the topological crossing sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingRecord {
    pub sign: i8,
    pub x: usize,
    pub a: usize,
    pub b: usize,
    pub y: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGraphDiagram {
    pub regions: usize,
    pub crossings: Vec<CrossingRecord>,
}

/// Corner-role assignment per crossing sign: which corner plays
/// (star_in, dot_left, dot_right, star_out). Calibrated once against the
/// known invariant values and frozen; see the crate README.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoleConvention {
    pub pos: [usize; 4],
    pub neg: [usize; 4],
}

/// The frozen role convention used by all public entry points.
///
/// At a positive crossing the star pair is the corner diagonal swept by
/// rotating the under-strand into the over-strand (corners 1 and 3); at a
/// negative crossing it is the other diagonal (corners 0 and 2). The
/// in/out directions and dot orders are fixed by requiring every published
/// invariant value together with move invariance over all small
/// biquasiles; the search that justifies this table lives in
/// `tests/calibration.rs`. The matching weight rule (see
/// `boltzmann::coloring_weight`) contributes -phi(x, a, b) at positive
/// crossings and +phi(x, a, b) at negative ones.
pub const ROLE_CONVENTION: RoleConvention = RoleConvention {
    pos: [1, 0, 2, 3],
    neg: [0, 1, 3, 2],
};

impl LinkDiagram {
    /// The 0-crossing unknot diagram (`PD[]`): one component, no edges.
    pub fn empty_unknot() -> Self {
        LinkDiagram { crossings: Vec::new(), edge_count: 0, components: Vec::new(), over_in_slot: Vec::new() }
    }

    /// Parse a PD code, either `PD[X[a,b,c,d], ...]` or a bare
    /// whitespace/comma separated list of edge labels in groups of four.
    pub fn parse_pd(text: &str) -> Result<Self, DiagramError> {
        let t = text.trim();
        if t.is_empty() {
            return Err(DiagramError::Parse("empty input".into()));
        }
        let tuples = if t.starts_with("PD[") || t.starts_with("pd[") {
            let inner = t
                .strip_suffix(']')
                .ok_or_else(|| DiagramError::Parse("missing closing ]".into()))?;
            let inner = &inner[3..];
            parse_x_tuples(inner)?
        } else {
            let nums: Result<Vec<u32>, _> = t
                .split(|ch: char| ch.is_whitespace() || ch == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<u32>().map_err(|_| DiagramError::Parse(format!("bad integer `{s}`"))))
                .collect();
            let nums = nums?;
            if nums.len() % 4 != 0 {
                return Err(DiagramError::Parse(format!(
                    "expected a multiple of 4 edge labels, got {}",
                    nums.len()
                )));
            }
            nums.chunks(4).map(|c| [c[0], c[1], c[2], c[3]]).collect()
        };
        Self::from_crossings(tuples)
    }

    /// Build and validate a diagram from raw crossing tuples.
    pub fn from_crossings(crossings: Vec<[u32; 4]>) -> Result<Self, DiagramError> {
        if crossings.is_empty() {
            return Ok(Self::empty_unknot());
        }
        let edge_count = validate_labels(&crossings)?;
        let components = component_ranges(&crossings, edge_count)?;
        let succ = successor_map(&components, edge_count);
        // Under-strand orientation: the tuple starts at the incoming
        // under-edge, so slot 2 must carry its successor.
        for (ci, t) in crossings.iter().enumerate() {
            if succ[t[0] as usize] != t[2] {
                return Err(DiagramError::MisorientedUnder { crossing: ci, a: t[0], c: t[2] });
            }
        }
        let over_in_slot = resolve_over_orientation(&crossings, &succ)?;
        Ok(LinkDiagram { crossings, edge_count, components, over_in_slot })
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> u32 {
        self.edge_count
    }

    pub fn component_count(&self) -> usize {
        if self.crossings.is_empty() {
            1
        } else {
            self.components.len()
        }
    }

    pub fn components(&self) -> &[(u32, u32)] {
        &self.components
    }

    /// Successor of an edge along its component's orientation.
    pub fn succ(&self, edge: u32) -> u32 {
        let (lo, hi) = self
            .components
            .iter()
            .copied()
            .find(|&(lo, hi)| (lo..=hi).contains(&edge))
            .expect("edge in some component");
        if edge == hi { lo } else { edge + 1 }
    }

    /// Standard writhe sign of a crossing, from strand orientations.
    pub fn crossing_sign(&self, crossing: usize) -> i8 {
        // Incoming over-edge at slot 3 (west) means the over-strand runs
        // west->east across the north-flowing under-strand: positive.
        if self.over_in_slot[crossing] == 3 { 1 } else { -1 }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossing_count()).map(|c| self.crossing_sign(c) as i64).sum()
    }

    pub fn to_pd_string(&self) -> String {
        let xs: Vec<String> = self
            .crossings
            .iter()
            .map(|t| format!("X[{},{},{},{}]", t[0], t[1], t[2], t[3]))
            .collect();
        format!("PD[{}]", xs.join(","))
    }

    /// Mirror image: reflect the plane, reversing the cyclic order at every
    /// crossing while keeping orientations and which strand is on top.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self.crossings.iter().map(|t| [t[0], t[3], t[2], t[1]]).collect();
        LinkDiagram::from_crossings(crossings).expect("mirror of valid diagram is valid")
    }

    /// Reverse the orientation of one component (by index), renumbering its
    /// edges to run along the new direction.
    pub fn reverse_component(&self, comp: usize) -> LinkDiagram {
        let (lo, hi) = self.components[comp];
        let relabel = |e: u32| if (lo..=hi).contains(&e) { lo + hi - e } else { e };
        let crossings = self
            .crossings
            .iter()
            .map(|t| {
                let n = [relabel(t[0]), relabel(t[1]), relabel(t[2]), relabel(t[3])];
                if (lo..=hi).contains(&t[0]) {
                    // Under-strand reversed: the old under-out is now the
                    // incoming under-edge; rotate the tuple by two.
                    [n[2], n[3], n[0], n[1]]
                } else {
                    n
                }
            })
            .collect();
        LinkDiagram::from_crossings(crossings).expect("component reversal preserves validity")
    }

    fn occurrences(&self) -> Vec<[(usize, u8); 2]> {
        let mut occ: Vec<Vec<(usize, u8)>> = vec![Vec::new(); self.edge_count as usize + 1];
        for (ci, t) in self.crossings.iter().enumerate() {
            for (s, &e) in t.iter().enumerate() {
                occ[e as usize].push((ci, s as u8));
            }
        }
        occ.into_iter().map(|v| if v.len() == 2 { [v[0], v[1]] } else { [(0, 0), (0, 0)] }).collect()
    }

    fn check_connected(&self) -> Result<(), DiagramError> {
        if self.crossings.len() <= 1 {
            return Ok(());
        }
        let occ = self.occurrences();
        let n = self.crossings.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for &e in &self.crossings[c] {
                for &(c2, _) in &occ[e as usize] {
                    if !seen[c2] {
                        seen[c2] = true;
                        stack.push(c2);
                    }
                }
            }
        }
        if seen.iter().all(|&s| s) { Ok(()) } else { Err(DiagramError::Split) }
    }

    /// Trace the regions (faces) of the underlying 4-valent plane graph.
    ///
    /// Walks darts with a constant turn at each crossing (arrive slot s,
    /// depart slot s-1), sweeping each crossing corner exactly once. The
    /// region count must satisfy Euler's formula `regions = edges -
    /// crossings + 2` for a connected diagram.
    pub fn trace_regions(&self) -> Result<Regions, DiagramError> {
        let (regions, corner_region, _) = self.trace_faces()?;
        Ok(Regions { region_count: regions, corner_region })
    }

    /// Face tracing; additionally returns, per edge, the regions on its two
    /// sides (indexed by dart direction).
    fn trace_faces(&self) -> Result<FaceData, DiagramError> {
        if self.crossings.is_empty() {
            // A crossingless circle splits the plane into two regions.
            return Ok((2, Vec::new(), Vec::new()));
        }
        self.check_connected()?;
        let occ = self.occurrences();
        let e = self.edge_count as usize;
        // Dart (edge, k) travels toward occ[edge][k].
        let dart_id = |edge: usize, k: usize| (edge - 1) * 2 + k;
        let mut region_of_dart = vec![usize::MAX; 2 * e];
        let mut corner_region = vec![[usize::MAX; 4]; self.crossings.len()];
        let mut regions = 0;
        for start in 0..2 * e {
            if region_of_dart[start] != usize::MAX {
                continue;
            }
            let rid = regions;
            regions += 1;
            let mut d = start;
            loop {
                region_of_dart[d] = rid;
                let (edge, k) = (d / 2 + 1, d % 2);
                let (c, s) = occ[edge][k];
                corner_region[c][(s as usize + 3) % 4] = rid;
                let t = (s + 3) % 4;
                let e2 = self.crossings[c][t as usize] as usize;
                let k2 = if occ[e2][0] == (c, t) { 1 } else { 0 };
                d = dart_id(e2, k2);
                if d == start {
                    break;
                }
            }
        }
        if regions != e - self.crossings.len() + 2 {
            return Err(DiagramError::NonPlanar);
        }
        let edge_faces: Vec<[usize; 2]> = (1..=e)
            .map(|edge| [region_of_dart[dart_id(edge, 0)], region_of_dart[dart_id(edge, 1)]])
            .collect();
        Ok((regions, corner_region, edge_faces))
    }

    /// Determinant of the link (the order of the first homology of the
    /// double branched cover, with 0 mapped to 0), computed from a
    /// checkerboard (Goeritz) matrix of the diagram. Used to validate the
    /// bundled corpus.
    pub fn determinant(&self) -> u64 {
        if self.crossings.is_empty() {
            return 1;
        }
        let (regions, corner_region, edge_faces) = self.trace_faces().expect("valid diagram");
        // Checkerboard 2-coloring: regions across an edge get opposite
        // colors; a planar diagram complement is always 2-colorable.
        let mut color = vec![u8::MAX; regions];
        color[0] = 0;
        let mut queue = vec![0usize];
        while let Some(r) = queue.pop() {
            for faces in &edge_faces {
                let pair = [faces[0], faces[1]];
                for which in 0..2 {
                    if pair[which] == r && color[pair[1 - which]] == u8::MAX {
                        color[pair[1 - which]] = 1 - color[r];
                        queue.push(pair[1 - which]);
                    }
                }
            }
        }
        debug_assert!(color.iter().all(|&c| c != u8::MAX));
        let white: Vec<usize> = (0..regions).filter(|&r| color[r] == 0).collect();
        let widx: std::collections::HashMap<usize, usize> =
            white.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let w = white.len();
        let mut g = vec![vec![0i128; w]; w];
        for (c, corners) in corner_region.iter().enumerate() {
            let _ = c;
            // Exactly one diagonal corner pair is white.
            let (u, v, eta) = if color[corners[0]] == 0 {
                (corners[0], corners[2], 1i128)
            } else {
                (corners[1], corners[3], -1i128)
            };
            if u == v {
                continue;
            }
            let (iu, iv) = (widx[&u], widx[&v]);
            g[iu][iv] -= eta;
            g[iv][iu] -= eta;
            g[iu][iu] += eta;
            g[iv][iv] += eta;
        }
        // Any principal minor of the Goeritz matrix has |det| = det(L).
        let k = w - 1;
        let mut minor: Vec<Vec<i128>> = (0..k).map(|i| g[i][..k].to_vec()).collect();
        bareiss_abs_det(&mut minor)
    }

    /// Dual-graph crossing records under the frozen role convention.
    pub fn to_dual_graph(&self) -> Result<DualGraphDiagram, DiagramError> {
        self.to_dual_graph_with(&ROLE_CONVENTION)
    }

    /// Same, with an explicit role convention (used by calibration tests).
    pub fn to_dual_graph_with(&self, conv: &RoleConvention) -> Result<DualGraphDiagram, DiagramError> {
        let regions = self.trace_regions()?;
        let mut records = Vec::with_capacity(self.crossing_count());
        for c in 0..self.crossing_count() {
            let sign = self.crossing_sign(c);
            let roles = if sign > 0 { conv.pos } else { conv.neg };
            let corner = &regions.corner_region[c];
            records.push(CrossingRecord {
                sign,
                x: corner[roles[0]],
                a: corner[roles[1]],
                b: corner[roles[2]],
                y: corner[roles[3]],
            });
        }
        Ok(DualGraphDiagram { regions: regions.region_count, crossings: records })
    }

    /// Apply a Reidemeister perturbation at the given edge, producing an
    /// equivalent diagram with one (R1) or two (R2) more crossings.
    pub fn perturb(&self, mv: ReidemeisterMove, site: u32) -> Result<LinkDiagram, DiagramError> {
        match mv {
            ReidemeisterMove::R1Plus => self.insert_kink(site, true),
            ReidemeisterMove::R1Minus => self.insert_kink(site, false),
            ReidemeisterMove::R2 => self.poke(site),
        }
    }

    fn insert_kink(&self, site: u32, positive: bool) -> Result<LinkDiagram, DiagramError> {
        if self.crossings.is_empty() {
            // Kink the bare circle.
            let t = if positive { [1, 1, 2, 2] } else { [1, 2, 2, 1] };
            return LinkDiagram::from_crossings(vec![t]);
        }
        if site == 0 || site > self.edge_count {
            return Err(DiagramError::InvalidSite(site));
        }
        let e = site;
        // The old edge splits into three parts: e enters the kink, e+1 is
        // the loop, e+2 continues to the old head. Labels above e shift.
        let occ = self.occurrences();
        let arrival = self.arrival_occurrence(&occ, e);
        let mut crossings: Vec<[u32; 4]> = Vec::with_capacity(self.crossing_count() + 1);
        for (ci, t) in self.crossings.iter().enumerate() {
            let mut nt = [0u32; 4];
            for (s, &lbl) in t.iter().enumerate() {
                let shifted = if lbl > e { lbl + 2 } else { lbl };
                nt[s] = if (ci, s as u8) == arrival { e + 2 } else { shifted };
            }
            crossings.push(nt);
        }
        let kink = if positive { [e, e + 2, e + 1, e + 1] } else { [e, e + 1, e + 1, e + 2] };
        crossings.push(kink);
        LinkDiagram::from_crossings(crossings)
    }

    /// Occurrence of edge e at which the strand arrives (its head).
    fn arrival_occurrence(&self, occ: &[[(usize, u8); 2]], e: u32) -> (usize, u8) {
        let [o1, o2] = occ[e as usize];
        for o in [o1, o2] {
            let (c, s) = o;
            match s {
                0 => return o, // incoming under
                2 => continue, // outgoing under
                _ => {
                    if self.over_in_slot[c] == s {
                        return o;
                    }
                }
            }
        }
        // Must be the departure twice only if data is inconsistent.
        unreachable!("edge {e} has no arrival occurrence");
    }

    /// Reidemeister 2 poke: slide edge `site` under the next edge along one
    /// of its faces, creating a cancelling +/- crossing pair.
    fn poke(&self, site: u32) -> Result<LinkDiagram, DiagramError> {
        if self.crossings.is_empty() {
            return Err(DiagramError::MoveNotApplicable("R2 needs at least one edge"));
        }
        if site == 0 || site > self.edge_count {
            return Err(DiagramError::InvalidSite(site));
        }
        match self.poke_forward_face(site) {
            Some(d) => Ok(d),
            None => {
                // The forward face is bounded by `site` alone; work in the
                // mirror, where the other face becomes the forward one.
                match self.mirror().poke_forward_face(site) {
                    Some(d) => Ok(d.mirror()),
                    None => Err(DiagramError::MoveNotApplicable("no companion edge on either face")),
                }
            }
        }
    }

    /// Poke along the face containing the forward dart of `e`; returns None
    /// if that face has no other edge on its boundary.
    fn poke_forward_face(&self, e: u32) -> Option<LinkDiagram> {
        let occ = self.occurrences();
        let arrival = self.arrival_occurrence(&occ, e);
        let k_fwd = if occ[e as usize][0] == arrival { 0 } else { 1 };
        // Walk the face orbit from the forward dart of e to the first dart
        // on a different edge.
        let mut edge = e as usize;
        let mut k = k_fwd;
        let (f, f_dart_forward) = loop {
            let (c, s) = occ[edge][k];
            let t = (s + 3) % 4;
            let e2 = self.crossings[c][(t % 4) as usize] as usize;
            let k2 = if occ[e2][0] == (c, t) { 1 } else { 0 };
            if e2 == e as usize && k2 == k_fwd {
                return None; // came back around without leaving e
            }
            if e2 != e as usize {
                let arr2 = self.arrival_occurrence(&occ, e2 as u32);
                let fwd = occ[e2][k2] == arr2;
                break (e2 as u32, fwd);
            }
            edge = e2;
            k = k2;
        };
        // Relabel: e splits into three consecutive labels, then f does.
        let map1 = |x: u32| if x > e { x + 2 } else { x };
        let f1 = map1(f);
        let map2 = move |x: u32| {
            let x = map1(x);
            if x > f1 { x + 2 } else { x }
        };
        let ep = if e > f1 { e + 2 } else { e };
        let fp = f1; // f1 <= f1 is never shifted by map2
        let e_arr = self.arrival_occurrence(&occ, e);
        let f_arr = self.arrival_occurrence(&occ, f);
        let mut crossings: Vec<[u32; 4]> = Vec::with_capacity(self.crossing_count() + 2);
        for (ci, t) in self.crossings.iter().enumerate() {
            let mut nt = [0u32; 4];
            for (s, &lbl) in t.iter().enumerate() {
                let here = (ci, s as u8);
                nt[s] = if here == e_arr {
                    ep + 2
                } else if here == f_arr {
                    fp + 2
                } else {
                    map2(lbl)
                };
            }
            crossings.push(nt);
        }
        // New crossings; e passes under f in both. With the face walked so
        // that e's forward dart and f's dart are coherent on its boundary:
        // if f's dart is also forward, f meets the second crossing first;
        // otherwise the first.
        if f_dart_forward {
            crossings.push([ep, fp + 1, ep + 1, fp + 2]);
            crossings.push([ep + 1, fp + 1, ep + 2, fp]);
        } else {
            crossings.push([ep, fp + 1, ep + 1, fp]);
            crossings.push([ep + 1, fp + 1, ep + 2, fp + 2]);
        }
        LinkDiagram::from_crossings(crossings).ok()
    }
}

/// Fraction-free Gaussian elimination; |determinant| of an integer matrix.
fn bareiss_abs_det(a: &mut [Vec<i128>]) -> u64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]).unsigned_abs() as u64
}

fn parse_x_tuples(inner: &str) -> Result<Vec<[u32; 4]>, DiagramError> {
    let mut tuples = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',').trim_start();
        if rest.is_empty() {
            break;
        }
        if !(rest.starts_with("X[") || rest.starts_with("x[")) {
            return Err(DiagramError::Parse(format!("expected X[...], found `{}`", truncate(rest))));
        }
        let close = rest
            .find(']')
            .ok_or_else(|| DiagramError::Parse("unclosed X[".into()))?;
        let body = &rest[2..close];
        let nums: Result<Vec<u32>, _> = body
            .split(',')
            .map(|s| s.trim().parse::<u32>().map_err(|_| DiagramError::Parse(format!("bad integer `{}`", s.trim()))))
            .collect();
        let nums = nums?;
        if nums.len() != 4 {
            return Err(DiagramError::Parse(format!("X[{body}] does not have 4 entries")));
        }
        if nums.contains(&0) {
            return Err(DiagramError::Parse("edge labels start at 1".into()));
        }
        tuples.push([nums[0], nums[1], nums[2], nums[3]]);
        rest = &rest[close + 1..];
    }
    Ok(tuples)
}

fn truncate(s: &str) -> String {
    s.chars().take(12).collect()
}

fn validate_labels(crossings: &[[u32; 4]]) -> Result<u32, DiagramError> {
    let max = crossings.iter().flatten().copied().max().unwrap_or(0);
    let expected = crossings.len() as u32 * 2;
    if max != expected {
        return Err(DiagramError::NonContiguousLabels { max: expected });
    }
    let mut count = vec![0usize; max as usize + 1];
    for &e in crossings.iter().flatten() {
        count[e as usize] += 1;
    }
    for e in 1..=max {
        if count[e as usize] != 2 {
            return Err(DiagramError::LabelCount { label: e, count: count[e as usize] });
        }
    }
    Ok(max)
}

/// Partition edges into components by following strands through crossings
/// (slots 0<->2 and 1<->3 are strand-mates), and check each component's
/// labels form a consecutive cyclic run in strand order.
fn component_ranges(crossings: &[[u32; 4]], edge_count: u32) -> Result<Vec<(u32, u32)>, DiagramError> {
    let e = edge_count as usize;
    let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); e + 1];
    for (ci, t) in crossings.iter().enumerate() {
        for (s, &lbl) in t.iter().enumerate() {
            occ[lbl as usize].push((ci, s));
        }
    }
    let mut comp_of = vec![usize::MAX; e + 1];
    let mut ranges = Vec::new();
    for start in 1..=e {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let comp_id = ranges.len();
        // Walk the strand: (edge, end index) -> continue through the
        // crossing at that end.
        let mut chain = vec![start as u32];
        comp_of[start] = comp_id;
        let mut cur = start;
        let mut end_idx = 0usize;
        loop {
            let (c, s) = occ[cur][end_idx];
            let mate_slot = s ^ 2;
            let next = crossings[c][mate_slot] as usize;
            // Continue out of next's far end.
            let here = (c, mate_slot);
            let far = if occ[next][0] == here { 1 } else { 0 };
            if next == start && far == 0 {
                break;
            }
            if comp_of[next] == usize::MAX {
                comp_of[next] = comp_id;
                chain.push(next as u32);
            } else if next != start {
                // revisiting mid-chain: the walk closes only at start
            }
            cur = next;
            end_idx = far;
            if chain.len() > e + 1 {
                return Err(DiagramError::ComponentNotConsecutive { edge: start as u32 });
            }
        }
        // chain lists the component's edges in strand order (one of the two
        // directions). Labels must be consecutive along it.
        let lo = *chain.iter().min().unwrap();
        let hi = *chain.iter().max().unwrap();
        if (hi - lo + 1) as usize != chain.len() {
            return Err(DiagramError::ComponentNotConsecutive { edge: lo });
        }
        let k = chain.len() as u32;
        let pos = chain.iter().position(|&x| x == lo).unwrap();
        let forward = (0..chain.len()).all(|i| chain[(pos + i) % chain.len()] == lo + i as u32);
        let backward = (0..chain.len()).all(|i| chain[(pos + chain.len() - i) % chain.len()] == lo + (i as u32) % k);
        if !forward && !backward {
            return Err(DiagramError::ComponentNotConsecutive { edge: lo });
        }
        ranges.push((lo, hi));
    }
    ranges.sort_unstable();
    // Ranges must tile 1..=edge_count.
    let mut next = 1;
    for &(lo, hi) in &ranges {
        if lo != next {
            return Err(DiagramError::ComponentNotConsecutive { edge: lo });
        }
        next = hi + 1;
    }
    if next != edge_count + 1 {
        return Err(DiagramError::NonContiguousLabels { max: edge_count });
    }
    Ok(ranges)
}

fn successor_map(components: &[(u32, u32)], edge_count: u32) -> Vec<u32> {
    let mut succ = vec![0u32; edge_count as usize + 1];
    for &(lo, hi) in components {
        for e in lo..=hi {
            succ[e as usize] = if e == hi { lo } else { e + 1 };
        }
    }
    succ
}

/// Decide, for each crossing, which over-slot (1 or 3) carries the incoming
/// edge. Mostly forced by the successor map; for a component lying entirely
/// over (both successor relations hold and no anchor exists) the lower
/// labelled edge is taken to arrive at the earlier crossing.
fn resolve_over_orientation(crossings: &[[u32; 4]], succ: &[u32]) -> Result<Vec<u8>, DiagramError> {
    let n = crossings.len();
    let mut over_in: Vec<Option<u8>> = vec![None; n];
    // arrival[e]: Some((crossing, slot)) once the head of e is known.
    let e_max = succ.len() - 1;
    let mut arrival: Vec<Option<(usize, u8)>> = vec![None; e_max + 1];
    let mut departure: Vec<Option<(usize, u8)>> = vec![None; e_max + 1];
    let set_arr = |arrival: &mut Vec<Option<(usize, u8)>>, e: usize, at: (usize, u8)| -> bool {
        match arrival[e] {
            None => {
                arrival[e] = Some(at);
                true
            }
            Some(prev) => prev == at,
        }
    };
    for (ci, t) in crossings.iter().enumerate() {
        if !set_arr(&mut arrival, t[0] as usize, (ci, 0)) {
            return Err(DiagramError::MisorientedUnder { crossing: ci, a: t[0], c: t[2] });
        }
        departure[t[2] as usize] = Some((ci, 2));
    }
    // Propagate over-slot decisions until stable.
    let mut changed = true;
    while changed {
        changed = false;
        for (ci, t) in crossings.iter().enumerate() {
            if over_in[ci].is_some() {
                continue;
            }
            let (b, d) = (t[1], t[3]);
            let b_can = succ[b as usize] == d;
            let d_can = succ[d as usize] == b;
            let decided: Option<u8> = if b_can && !d_can {
                Some(1)
            } else if d_can && !b_can {
                Some(3)
            } else if !b_can && !d_can {
                return Err(DiagramError::InconsistentOver { crossing: ci });
            } else {
                // Both possible: use any known arrival/departure of b or d.
                if arrival[b as usize] == Some((ci, 1)) || departure[d as usize] == Some((ci, 3)) {
                    Some(1)
                } else if arrival[d as usize] == Some((ci, 3)) || departure[b as usize] == Some((ci, 1)) {
                    Some(3)
                } else if arrival[b as usize].is_some() && arrival[b as usize] != Some((ci, 1)) {
                    // b arrives elsewhere, so here it departs.
                    Some(3)
                } else if arrival[d as usize].is_some() && arrival[d as usize] != Some((ci, 3)) {
                    Some(1)
                } else {
                    None
                }
            };
            if let Some(slot) = decided {
                over_in[ci] = Some(slot);
                let (ein, eout) = if slot == 1 { (b, d) } else { (d, b) };
                if !set_arr(&mut arrival, ein as usize, (ci, slot)) {
                    return Err(DiagramError::InconsistentOver { crossing: ci });
                }
                departure[eout as usize] = Some((ci, slot ^ 2));
                changed = true;
            }
        }
    }
    // Anything left is a fully-over component; orient it canonically.
    for ci in 0..n {
        if over_in[ci].is_none() {
            let (b, d) = (crossings[ci][1], crossings[ci][3]);
            let lower = b.min(d);
            let slot = if lower == b { 1 } else { 3 };
            over_in[ci] = Some(slot);
            let (ein, eout) = if slot == 1 { (b, d) } else { (d, b) };
            arrival[ein as usize] = Some((ci, slot));
            departure[eout as usize] = Some((ci, slot ^ 2));
            // Re-run propagation for the rest of this component.
            let mut changed = true;
            while changed {
                changed = false;
                for (cj, t) in crossings.iter().enumerate() {
                    if over_in[cj].is_some() {
                        continue;
                    }
                    let (b2, d2) = (t[1], t[3]);
                    let slot2 = if arrival[b2 as usize].is_some() && arrival[b2 as usize] != Some((cj, 1)) {
                        Some(3)
                    } else if arrival[d2 as usize].is_some() && arrival[d2 as usize] != Some((cj, 3)) {
                        Some(1)
                    } else {
                        None
                    };
                    if let Some(sl) = slot2 {
                        over_in[cj] = Some(sl);
                        let (ein2, eout2) = if sl == 1 { (t[1], t[3]) } else { (t[3], t[1]) };
                        arrival[ein2 as usize] = Some((cj, sl));
                        departure[eout2 as usize] = Some((cj, sl ^ 2));
                        changed = true;
                    }
                }
            }
        }
    }
    Ok(over_in.into_iter().map(|o| o.unwrap()).collect())
}
