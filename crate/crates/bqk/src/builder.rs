//! Constructing PD codes from strip (Morse) presentations.
//!
//! A diagram is assembled top-to-bottom on a strip of downward strands:
//! cups create adjacent strand pairs, crossings swap neighbours with a
//! chosen over-strand, caps join neighbours. Wires are tracked in a
//! union-find whose roots become the edges of the final 4-valent map;
//! orientation and consecutive edge numbering are assigned at emission.
//! Braid closures, plat closures, rational (continued-fraction) links and
//! pretzel links are built on top, and are the source of the bundled
//! corpus fixtures.

use thiserror::Error;

use crate::diagram::{DiagramError, LinkDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("strip position {pos} out of range (width {width})")]
    Position { pos: usize, width: usize },
    #[error("cap would close a crossingless loop")]
    CrossinglessLoop,
    #[error("construction finished with {0} open strands")]
    OpenStrands(usize),
    #[error("emitted code is invalid: {0}")]
    Invalid(#[from] DiagramError),
    #[error("empty construction")]
    Empty,
}

/// Crossing slot layout: ports in counterclockwise order with the
/// under-strand always on the (0, 2) diagonal.
#[derive(Debug)]
pub struct PlanarBuilder {
    parent: Vec<usize>,
    terms: Vec<Vec<(usize, u8)>>,
    strip: Vec<usize>,
    ncross: usize,
}

impl Default for PlanarBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl PlanarBuilder {
    pub fn new() -> Self {
        PlanarBuilder { parent: Vec::new(), terms: Vec::new(), strip: Vec::new(), ncross: 0 }
    }

    pub fn width(&self) -> usize {
        self.strip.len()
    }

    fn find(&mut self, w: usize) -> usize {
        if self.parent[w] != w {
            let root = self.find(self.parent[w]);
            self.parent[w] = root;
        }
        self.parent[w]
    }

    fn new_wire(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        self.terms.push(Vec::new());
        id
    }

    fn terminate(&mut self, wire: usize, port: (usize, u8)) {
        let r = self.find(wire);
        self.terms[r].push(port);
        debug_assert!(self.terms[r].len() <= 2);
    }

    /// Insert a new arc whose two ends occupy strip positions pos, pos+1.
    pub fn cup(&mut self, pos: usize) -> Result<(), BuildError> {
        if pos > self.strip.len() {
            return Err(BuildError::Position { pos, width: self.strip.len() });
        }
        let w = self.new_wire();
        self.strip.insert(pos, w);
        self.strip.insert(pos, w);
        Ok(())
    }

    /// Join the strands at positions pos, pos+1.
    pub fn cap(&mut self, pos: usize) -> Result<(), BuildError> {
        if pos + 1 >= self.strip.len() {
            return Err(BuildError::Position { pos, width: self.strip.len() });
        }
        let a = self.find(self.strip[pos]);
        let b = self.find(self.strip[pos + 1]);
        self.strip.drain(pos..pos + 2);
        if a == b {
            if self.terms[a].is_empty() {
                return Err(BuildError::CrossinglessLoop);
            }
            return Ok(()); // closes a component through its crossings
        }
        let (root, child) = (a.min(b), a.max(b));
        self.parent[child] = root;
        let moved = std::mem::take(&mut self.terms[child]);
        self.terms[root].extend(moved);
        debug_assert!(self.terms[root].len() <= 2);
        Ok(())
    }

    /// Cross the strands at positions pos, pos+1. With `left_over` the
    /// strand entering from the upper left passes on top.
    pub fn crossing(&mut self, pos: usize, left_over: bool) -> Result<(), BuildError> {
        if pos + 1 >= self.strip.len() {
            return Err(BuildError::Position { pos, width: self.strip.len() });
        }
        let c = self.ncross;
        self.ncross += 1;
        // CCW port order with the under-strand on slots (0, 2):
        //   left_over:  0=NE 1=NW 2=SW 3=SE   (over NW->SE)
        //   right_over: 0=NW 1=SW 2=SE 3=NE   (over NE->SW)
        let (tl, tr, bl, br) = if left_over { (1, 0, 2, 3) } else { (0, 3, 1, 2) };
        let wl = self.strip[pos];
        let wr = self.strip[pos + 1];
        self.terminate(wl, (c, tl));
        self.terminate(wr, (c, tr));
        let nl = self.new_wire();
        let nr = self.new_wire();
        self.terminate(nl, (c, bl));
        self.terminate(nr, (c, br));
        self.strip[pos] = nl;
        self.strip[pos + 1] = nr;
        Ok(())
    }

    /// Close the construction into an oriented, consecutively numbered PD.
    pub fn emit(mut self) -> Result<LinkDiagram, BuildError> {
        if !self.strip.is_empty() {
            return Err(BuildError::OpenStrands(self.strip.len()));
        }
        if self.ncross == 0 {
            return Err(BuildError::Empty);
        }
        // Collect edges: roots with two terminated ends.
        let nwires = self.parent.len();
        let mut edges: Vec<[(usize, u8); 2]> = Vec::new();
        for w in 0..nwires {
            if self.find(w) == w && self.terms[w].len() == 2 {
                edges.push([self.terms[w][0], self.terms[w][1]]);
            }
        }
        edges.sort_unstable();
        let mut port_edge = vec![[usize::MAX; 4]; self.ncross];
        for (eid, ends) in edges.iter().enumerate() {
            for &(c, s) in ends {
                debug_assert_eq!(port_edge[c][s as usize], usize::MAX);
                port_edge[c][s as usize] = eid;
            }
        }
        debug_assert!(port_edge.iter().flatten().all(|&e| e != usize::MAX));
        // Orient components and assign consecutive labels. head[e] is the
        // endpoint index (0/1) at which edge e arrives.
        let ne = edges.len();
        let mut label = vec![0u32; ne];
        let mut head = vec![usize::MAX; ne];
        let mut next_label = 1u32;
        for start in 0..ne {
            if head[start] != usize::MAX {
                continue;
            }
            let mut e = start;
            let mut h = 1usize; // start flows toward its second end
            loop {
                head[e] = h;
                label[e] = next_label;
                next_label += 1;
                let (c, s) = edges[e][h];
                let mate = (s ^ 2) as usize;
                let f = port_edge[c][mate];
                let fh = if edges[f][0] == (c, mate as u8) { 1 } else { 0 };
                e = f;
                h = fh;
                if e == start {
                    break;
                }
            }
        }
        // Emit tuples, rotating so slot 0 is the incoming under-edge.
        let mut crossings = Vec::with_capacity(self.ncross);
        for c in 0..self.ncross {
            let e_at = |s: usize| port_edge[c][s];
            let arrives = |e: usize, s: usize| edges[e][head[e]] == (c, s as u8);
            let rot = if arrives(e_at(0), 0) {
                0
            } else {
                debug_assert!(arrives(e_at(2), 2));
                2
            };
            let t: Vec<u32> = (0..4).map(|k| label[e_at((rot + k) % 4)]).collect();
            crossings.push([t[0], t[1], t[2], t[3]]);
        }
        Ok(LinkDiagram::from_crossings(crossings)?)
    }
}

/// Trace closure of a braid word on `strands` strands. Letter `i > 0` is
/// the positive generator crossing strands (i, i+1); negative letters give
/// the inverse crossing. Positive letters produce writhe-positive
/// crossings.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<LinkDiagram, BuildError> {
    assert!(strands >= 2);
    let k = strands;
    let mut b = PlanarBuilder::new();
    for j in 0..k {
        b.cup(j)?;
    }
    for &letter in word {
        let i = letter.unsigned_abs() as usize;
        assert!(i >= 1 && i < k, "generator {letter} out of range for {k} strands");
        b.crossing(k + i - 1, letter < 0)?;
    }
    for j in (0..k).rev() {
        b.cap(j)?;
    }
    b.emit()
}

/// Plat closure of a braid word on an even number of strands, with cups
/// and caps on the pairs (1,2), (3,4), ...
pub fn plat_closure(strands: usize, word: &[i32]) -> Result<LinkDiagram, BuildError> {
    assert!(strands >= 2 && strands % 2 == 0);
    let mut b = PlanarBuilder::new();
    for j in 0..strands / 2 {
        b.cup(2 * j)?;
    }
    for &letter in word {
        let i = letter.unsigned_abs() as usize;
        assert!(i >= 1 && i < strands);
        b.crossing(i - 1, letter < 0)?;
    }
    for _ in 0..strands / 2 {
        b.cap(0)?;
    }
    b.emit()
}

/// The (2, n) torus link as a twist tower; `positive` picks the chirality.
pub fn torus2(n: usize, positive: bool) -> LinkDiagram {
    let letter = if positive { 1 } else { -1 };
    braid_closure(2, &vec![letter; n]).expect("torus tower is valid")
}

/// Alternating 2-bridge link of the continued fraction [a1, a2, ...]
/// (a1 + 1/(a2 + 1/...)), as a 4-plat: horizontal twist blocks on the
/// middle pair alternating with oppositely-handed blocks on the left pair.
pub fn rational(cf: &[u32]) -> Result<LinkDiagram, BuildError> {
    assert!(!cf.is_empty());
    // Normalize to odd length so the word ends with a middle-pair block;
    // a final side-pair block would just spin the bottom caps. Splitting
    // the last term as a_k = (a_k - 1) + 1/1 keeps the fraction and the
    // crossing count.
    let mut cf: Vec<u32> = cf.to_vec();
    if cf.len() % 2 == 0 {
        let last = *cf.last().unwrap();
        assert!(last >= 1);
        if last == 1 {
            cf.pop();
            *cf.last_mut().unwrap() += 1;
        } else {
            *cf.last_mut().unwrap() = last - 1;
            cf.push(1);
        }
    }
    let mut word = Vec::new();
    for (idx, &a) in cf.iter().enumerate() {
        let letter = if idx % 2 == 0 { 2 } else { -1 };
        word.extend(std::iter::repeat_n(letter, a as usize));
    }
    plat_closure(4, &word)
}

/// Pretzel link P(q1, ..., qk): vertical twist columns joined by rails.
/// Signs give the chirality per column.
pub fn pretzel(columns: &[i32]) -> Result<LinkDiagram, BuildError> {
    let k = columns.len();
    assert!(k >= 1);
    let mut b = PlanarBuilder::new();
    // Numerator closure: an outer arc whose ends become the leftmost and
    // rightmost strands, with the column-connecting arcs nested inside.
    b.cup(0)?;
    for j in 1..k {
        b.cup(2 * j - 1)?;
    }
    for (j, &q) in columns.iter().enumerate() {
        for _ in 0..q.unsigned_abs() {
            b.crossing(2 * j, q < 0)?;
        }
    }
    for _ in 1..k {
        b.cap(1)?;
    }
    b.cap(0)?;
    b.emit()
}
