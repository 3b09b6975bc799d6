//! Closed-braid planar diagrams as combinatorial maps.
//!
//! Every crossing has four ports in counterclockwise order. For a braid
//! letter these are `[SW, SE, NE, NW]`; strands enter at SW and SE and leave
//! at NE and NW. Wedge `k` of a crossing is the corner between ports `k` and
//! `k + 1`, so for braid letters wedge 0 is south, 1 east, 2 north, 3 west.
//!
//! Regions of a braid closure are numbered from 1: region `t` is the face
//! directly above letter `t` (the gap between the two strands it crosses, up to
//! the next letter on the same generator). The face left of the first strand
//! is `c + 1` and the face right of the last strand is `c + 2`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Gf2Matrix};

/// A port: (crossing index, port number 0..4).
pub type Port = (usize, u8);

#[derive(Debug, Clone, PartialEq, Eq)]
struct CrossingMap {
    /// The port at the other end of the edge leaving each port.
    neighbor: [Port; 4],
    /// Orientation: whether the strand enters through each port.
    incoming: [bool; 4],
    /// Component label of the strand through each port.
    component: [usize; 4],
    generator: Option<usize>,
}

/// A face of the diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Region {
    pub id: usize,
    /// Crossing indices met at the corners of the face, with multiplicity.
    pub boundary_crossings: Vec<usize>,
    pub is_outer: bool,
}

impl Region {
    /// Distinct crossings on the boundary, ascending.
    pub fn crossing_set(&self) -> Vec<usize> {
        let mut v = self.boundary_crossings.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[derive(Debug, PartialEq, Eq)]
struct MapData {
    crossings: Vec<CrossingMap>,
    regions: Vec<Region>,
    components: usize,
}

/// An oriented link diagram on the sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    map: Arc<MapData>,
    signs: Vec<i8>,
    word: Option<BraidWord>,
}

/// Crossings whose sign is flipped, indexed by crossing.
pub type FlipVector = BitVec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkingData {
    pub components: usize,
    /// `pairwise_crossings[i][j]`: crossings between components `i` and `j`
    /// (for `i == j`, self-crossings of component `i`).
    pub pairwise_crossings: Vec<Vec<usize>>,
    /// Half the signed crossing count between distinct components.
    pub linking: Vec<Vec<i64>>,
}

impl LinkingData {
    /// Total linking of component `i` with all others.
    pub fn total_linking(&self, i: usize) -> i64 {
        (0..self.components).filter(|&j| j != i).map(|j| self.linking[i][j]).sum()
    }

    /// Sum over unordered pairs of distinct components.
    pub fn mixed_crossings(&self) -> usize {
        let d = self.components;
        (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).map(|(i, j)| self.pairwise_crossings[i][j]).sum()
    }

    pub fn self_crossings(&self) -> usize {
        (0..self.components).map(|i| self.pairwise_crossings[i][i]).sum()
    }
}

/// Port opposite `k` on the same strand.
#[inline]
fn through(k: u8) -> u8 {
    (k + 2) % 4
}

/// Closes a braid word into a diagram.
pub fn close_braid(w: &BraidWord) -> Result<PlanarDiagram> {
    if w.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let p = w.strands();
    let counts = w.generator_counts();
    if let Some(g) = (1..p).find(|&g| counts[g] == 0) {
        return Err(Error::Disconnected(g));
    }
    let c = w.len();
    // Per strand position, the (crossing, bottom port, top port) events in letter order.
    let mut events: Vec<Vec<(usize, u8, u8)>> = vec![Vec::new(); p];
    for (x, l) in w.letters().iter().enumerate() {
        let g = l.generator();
        events[g - 1].push((x, 0, 3));
        events[g].push((x, 1, 2));
    }
    let mut neighbor = vec![[(usize::MAX, 0u8); 4]; c];
    for evs in &events {
        for (k, &(x, _, top)) in evs.iter().enumerate() {
            let (y, bottom, _) = evs[(k + 1) % evs.len()];
            neighbor[x][top as usize] = (y, bottom);
            neighbor[y][bottom as usize] = (x, top);
        }
    }
    let crossings: Vec<CrossingMap> = (0..c)
        .map(|x| CrossingMap {
            neighbor: neighbor[x],
            incoming: [true, true, false, false],
            component: [usize::MAX; 4],
            generator: Some(w.letters()[x].generator()),
        })
        .collect();
    let signs = w.letters().iter().map(|l| l.sign() as i8).collect();
    let mut map = MapData { crossings, regions: Vec::new(), components: 0 };
    label_components(&mut map);
    let faces = trace_faces(&map.crossings);

    // Calibrated numbering.
    let face_of: HashMap<(usize, u8), usize> =
        faces.iter().enumerate().flat_map(|(f, corners)| corners.iter().map(move |&k| (k, f))).collect();
    let mut id_of_face = vec![0usize; faces.len()];
    for x in 0..c {
        let f = face_of[&(x, 2)];
        if id_of_face[f] != 0 {
            return Err(Error::Pipeline {
                stage: "close_braid",
                detail: format!("face above letter {} repeats", x + 1),
            });
        }
        id_of_face[f] = x + 1;
    }
    let first = (0..c).find(|&x| w.letters()[x].generator() == 1).unwrap();
    let last = (0..c).find(|&x| w.letters()[x].generator() == p - 1).unwrap();
    let west = face_of[&(first, 3)];
    let east = face_of[&(last, 1)];
    id_of_face[west] = c + 1;
    id_of_face[east] = c + 2;
    if id_of_face.contains(&0) || faces.len() != c + 2 {
        return Err(Error::Pipeline {
            stage: "close_braid",
            detail: format!("expected {} faces, traced {}", c + 2, faces.len()),
        });
    }
    let mut regions: Vec<Region> = faces
        .iter()
        .enumerate()
        .map(|(f, corners)| Region {
            id: id_of_face[f],
            boundary_crossings: corners.iter().map(|&(x, _)| x).collect(),
            is_outer: id_of_face[f] > c,
        })
        .collect();
    regions.sort_by_key(|r| r.id);
    map.regions = regions;
    Ok(PlanarDiagram { map: Arc::new(map), signs, word: Some(w.clone()) })
}

fn label_components(map: &mut MapData) {
    let mut next = 0;
    for x in 0..map.crossings.len() {
        for k in 0..4u8 {
            if map.crossings[x].component[k as usize] != usize::MAX {
                continue;
            }
            let (mut y, mut j) = (x, k);
            while map.crossings[y].component[j as usize] == usize::MAX {
                map.crossings[y].component[j as usize] = next;
                let o = through(j);
                map.crossings[y].component[o as usize] = next;
                (y, j) = map.crossings[y].neighbor[o as usize];
            }
            next += 1;
        }
    }
    map.components = next;
}

/// Orbits of wedges: from wedge `(x, k)` leave through port `k + 1`; arriving at
/// port `j` of `y`, the face continues in wedge `(y, j)`.
fn trace_faces(crossings: &[CrossingMap]) -> Vec<Vec<(usize, u8)>> {
    let c = crossings.len();
    let mut seen = vec![[false; 4]; c];
    let mut faces = Vec::new();
    for x in 0..c {
        for k in 0..4u8 {
            if seen[x][k as usize] {
                continue;
            }
            let mut corners = Vec::new();
            let (mut y, mut j) = (x, k);
            while !seen[y][j as usize] {
                seen[y][j as usize] = true;
                corners.push((y, j));
                (y, j) = crossings[y].neighbor[((j + 1) % 4) as usize];
            }
            faces.push(corners);
        }
    }
    faces
}

impl PlanarDiagram {
    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn region_count(&self) -> usize {
        self.map.regions.len()
    }

    pub fn regions(&self) -> &[Region] {
        &self.map.regions
    }

    pub fn region(&self, id: usize) -> Result<&Region> {
        id.checked_sub(1)
            .and_then(|i| self.map.regions.get(i))
            .ok_or(Error::InvalidRegion { id, count: self.region_count() })
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn components(&self) -> usize {
        self.map.components
    }

    /// The braid word with current crossing signs, for diagrams built from a braid.
    pub fn word(&self) -> Option<&BraidWord> {
        self.word.as_ref()
    }

    pub fn generator(&self, crossing: usize) -> Option<usize> {
        self.map.crossings[crossing].generator
    }

    /// Port pairs forming the under strand of a crossing: 0 means ports
    /// (0, 2), 1 means ports (1, 3).
    pub fn under_axis(&self, crossing: usize) -> u8 {
        let cm = &self.map.crossings[crossing];
        let in0 = if cm.incoming[0] { 0u8 } else { 2 };
        let in1 = if cm.incoming[1] { 1u8 } else { 3 };
        // positive iff the over strand enters at (under_in + 3) % 4
        let axis0_positive = in1 == (in0 + 3) % 4;
        let positive = self.signs[crossing] > 0;
        if positive == axis0_positive {
            0
        } else {
            1
        }
    }

    /// Crossing changes at every crossing on the boundary of region `id`,
    /// each crossing flipped once.
    pub fn region_crossing_change(&self, id: usize) -> Result<PlanarDiagram> {
        let crossings = self.region(id)?.crossing_set();
        let mut out = self.clone();
        for x in crossings {
            out.flip_crossing(x);
        }
        Ok(out)
    }

    /// Applies RCC at each region in turn.
    pub fn apply_regions(&self, ids: &[usize]) -> Result<PlanarDiagram> {
        let flips = self.flip_vector_of(ids)?;
        Ok(self.apply_flips(&flips))
    }

    /// Combined flip vector of a region selection (XOR of incidence rows).
    pub fn flip_vector_of(&self, ids: &[usize]) -> Result<FlipVector> {
        let mut v = BitVec::zeros(self.crossing_count());
        for &id in ids {
            for x in self.region(id)?.crossing_set() {
                v.toggle(x);
            }
        }
        Ok(v)
    }

    pub fn apply_flips(&self, flips: &FlipVector) -> PlanarDiagram {
        assert_eq!(flips.len(), self.crossing_count());
        let mut out = self.clone();
        for x in flips.ones() {
            out.flip_crossing(x);
        }
        out
    }

    fn flip_crossing(&mut self, x: usize) {
        self.signs[x] = -self.signs[x];
        if let Some(w) = &self.word {
            let mut letters = w.letters().to_vec();
            letters[x] = letters[x].inverse();
            self.word = Some(BraidWord::new(w.strands(), letters).expect("same generators"));
        }
    }

    /// Rows are regions in id order, columns crossings; set semantics.
    pub fn incidence_matrix(&self) -> Gf2Matrix {
        let c = self.crossing_count();
        let rows = self.map.regions.iter().map(|r| BitVec::from_indices(c, r.crossing_set())).collect();
        Gf2Matrix::new(c, rows)
    }

    /// Incidence counted with multiplicity (a face meeting a crossing at two corners counts 2).
    pub fn incidence_multiplicity(&self) -> Vec<Vec<u8>> {
        let c = self.crossing_count();
        self.map
            .regions
            .iter()
            .map(|r| {
                let mut row = vec![0u8; c];
                for &x in &r.boundary_crossings {
                    row[x] += 1;
                }
                row
            })
            .collect()
    }

    /// Component labels `(over, under)` at a crossing.
    pub fn crossing_components(&self, x: usize) -> (usize, usize) {
        let axis = self.under_axis(x) as usize;
        let cm = &self.map.crossings[x];
        (cm.component[1 - axis], cm.component[axis])
    }

    pub fn linking_data(&self) -> LinkingData {
        let d = self.components();
        let mut pairwise = vec![vec![0usize; d]; d];
        let mut signed = vec![vec![0i64; d]; d];
        for x in 0..self.crossing_count() {
            let cm = &self.map.crossings[x];
            let (a, b) = (cm.component[0], cm.component[1]);
            if a == b {
                pairwise[a][a] += 1;
            } else {
                pairwise[a][b] += 1;
                pairwise[b][a] += 1;
                signed[a][b] += self.signs[x] as i64;
                signed[b][a] += self.signs[x] as i64;
            }
        }
        let linking = signed
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&s| {
                        debug_assert_eq!(s % 2, 0, "signed crossings between two components come in pairs");
                        s / 2
                    })
                    .collect()
            })
            .collect();
        LinkingData { components: d, pairwise_crossings: pairwise, linking }
    }

    /// Euler characteristic check: `V - E + F = 2` with `E = 2V`.
    pub fn satisfies_euler(&self) -> bool {
        self.region_count() == self.crossing_count() + 2
    }

    /// Standard PD code: each crossing lists its four edge labels
    /// counterclockwise starting from the incoming under edge. Edges are
    /// numbered consecutively along each component in the direction of travel.
    pub fn to_pd(&self) -> PdCode {
        let c = self.crossing_count();
        let crossings = &self.map.crossings;
        let mut label: Vec<[usize; 4]> = vec![[0; 4]; c];
        let mut next = 1;
        for x in 0..c {
            for k in 0..4u8 {
                if crossings[x].incoming[k as usize] || label[x][k as usize] != 0 {
                    continue;
                }
                let (mut y, mut j) = (x, k);
                while label[y][j as usize] == 0 {
                    let (z, i) = crossings[y].neighbor[j as usize];
                    label[y][j as usize] = next;
                    label[z][i as usize] = next;
                    next += 1;
                    (y, j) = (z, through(i));
                }
            }
        }
        let tuples = (0..c)
            .map(|x| {
                let u = if self.under_axis(x) == 0 { 0u8 } else { 1 };
                let start = if crossings[x].incoming[u as usize] { u } else { u + 2 };
                let l = &label[x];
                [0u8, 1, 2, 3].map(|k| l[((start + k) % 4) as usize])
            })
            .collect();
        PdCode(tuples)
    }

    /// Builds a diagram from a PD code. Orientation of each under strand is
    /// read from the code; over strands inherit orientation from the component
    /// they lie on, falling back to increasing edge labels.
    pub fn from_pd(pd: &PdCode) -> Result<PlanarDiagram> {
        let c = pd.0.len();
        if c == 0 {
            return Err(Error::EmptyDiagram);
        }
        let mut ends: BTreeMap<usize, Vec<Port>> = BTreeMap::new();
        for (x, t) in pd.0.iter().enumerate() {
            for (k, &e) in t.iter().enumerate() {
                ends.entry(e).or_default().push((x, k as u8));
            }
        }
        let mut neighbor = vec![[(usize::MAX, 0u8); 4]; c];
        for (e, v) in &ends {
            if v.len() != 2 {
                return Err(Error::PdCode(format!("edge {e} appears {} times", v.len())));
            }
            neighbor[v[0].0][v[0].1 as usize] = v[1];
            neighbor[v[1].0][v[1].1 as usize] = v[0];
        }
        // incoming[x][k]: Some(true) incoming, Some(false) outgoing.
        let mut incoming: Vec<[Option<bool>; 4]> = vec![[Some(true), None, Some(false), None]; c];
        let mut changed = true;
        while changed {
            changed = false;
            for x in 0..c {
                for k in 0..4 {
                    if let Some(dir) = incoming[x][k] {
                        let (y, j) = neighbor[x][k];
                        let want = Some(!dir);
                        match incoming[y][j as usize] {
                            None => {
                                incoming[y][j as usize] = want;
                                incoming[y][through(j) as usize] = Some(dir);
                                changed = true;
                            }
                            Some(v) if Some(v) != want => {
                                return Err(Error::PdCode(format!("inconsistent orientation at edge {}", pd.0[x][k])));
                            }
                            _ => {}
                        }
                    }
                }
            }
            if !changed {
                // An over-only component: orient it by label order and continue.
                if let Some(x) = (0..c).find(|&x| incoming[x][1].is_none()) {
                    let (b, d) = (pd.0[x][1], pd.0[x][3]);
                    let d_to_b = b == d + 1 || (d > b + 1);
                    incoming[x][3] = Some(d_to_b);
                    incoming[x][1] = Some(!d_to_b);
                    changed = true;
                }
            }
        }
        let mut signs = Vec::with_capacity(c);
        let mut crossings = Vec::with_capacity(c);
        for x in 0..c {
            let inc = incoming[x].map(|v| v.expect("every port oriented"));
            let over_in = if inc[1] { 1u8 } else { 3 };
            signs.push(if over_in == 3 { 1 } else { -1 });
            crossings.push(CrossingMap {
                neighbor: neighbor[x],
                incoming: inc,
                component: [usize::MAX; 4],
                generator: None,
            });
        }
        let mut map = MapData { crossings, regions: Vec::new(), components: 0 };
        label_components(&mut map);
        let faces = trace_faces(&map.crossings);
        map.regions = faces
            .iter()
            .enumerate()
            .map(|(f, corners)| Region {
                id: f + 1,
                boundary_crossings: corners.iter().map(|&(x, _)| x).collect(),
                is_outer: false,
            })
            .collect();
        Ok(PlanarDiagram { map: Arc::new(map), signs, word: None })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let m = self.incidence_matrix();
        serde_json::json!({
            "crossings": self.crossing_count(),
            "components": self.components(),
            "signs": self.signs,
            "word": self.word.as_ref().map(|w| w.to_ints()),
            "regions": self.regions(),
            "incidence": m.rows().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Planar diagram code: one 4-tuple of edge labels per crossing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCode(pub Vec<[usize; 4]>);

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("PD[")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "X[{}, {}, {}, {}]", t[0], t[1], t[2], t[3])?;
        }
        f.write_str("]")
    }
}

impl FromStr for PdCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<PdCode> {
        let nums: Vec<usize> = s
            .split(|ch: char| !ch.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|e| Error::PdCode(format!("{t}: {e}"))))
            .collect::<Result<_>>()?;
        if nums.len() % 4 != 0 || nums.is_empty() {
            return Err(Error::PdCode(format!("{} labels is not a positive multiple of 4", nums.len())));
        }
        Ok(PdCode(nums.chunks(4).map(|c| [c[0], c[1], c[2], c[3]]).collect()))
    }
}

/// Letters of `w` touched by RCC at region `t` of its closure, 1-based, computed
/// directly from the word without building the map.
pub fn region_letters(w: &BraidWord, t: usize) -> Vec<usize> {
    let c = w.len();
    let g = w.letters()[t - 1].generator();
    let mut out = vec![t];
    let mut k = t;
    loop {
        k = k % c + 1;
        let h = w.letters()[k - 1].generator();
        if h == g {
            out.push(k);
            break;
        }
        if h + 1 == g || h == g + 1 {
            out.push(k);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
