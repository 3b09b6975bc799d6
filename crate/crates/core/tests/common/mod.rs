//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use regionum::{BraidWord, LaurentPoly, PdCode, PlanarDiagram};

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
    fn classes(&mut self, n: usize) -> usize {
        (0..n).filter(|&x| self.find(x) == x).count()
    }
}

/// `δ^{loops-1}` weighted by `A^{k}`, accumulated into a coefficient map.
fn add_state(acc: &mut BTreeMap<i64, i64>, a_exp: i64, loops: usize) {
    let mut poly: BTreeMap<i64, i64> = BTreeMap::from([(a_exp, 1)]);
    for _ in 1..loops {
        let mut next = BTreeMap::new();
        for (e, c) in poly {
            *next.entry(e + 2).or_insert(0) -= c;
            *next.entry(e - 2).or_insert(0) -= c;
        }
        poly = next;
    }
    for (e, c) in poly {
        *acc.entry(e).or_insert(0) += c;
    }
}

fn finish(acc: BTreeMap<i64, i64>) -> LaurentPoly {
    LaurentPoly::from_terms(acc.into_iter().filter(|(_, c)| *c != 0))
}

/// Kauffman bracket of the trace closure by summing over all `2^c` states.
/// A positive letter's A-smoothing is vertical; a negative letter's is horizontal.
pub fn naive_bracket_braid(w: &BraidWord) -> LaurentPoly {
    let p = w.strands();
    let c = w.len();
    assert!(c <= 20, "state sum over 2^{c} states");
    let mut acc = BTreeMap::new();
    for state in 0u32..(1 << c) {
        // segment ids: strand slots carry a current id; each crossing creates two new ones
        let total = p + 2 * c;
        let mut dsu = Dsu::new(total);
        let mut cur: Vec<usize> = (0..p).collect();
        let mut next_id = p;
        let mut a_count = 0i64;
        for (k, l) in w.letters().iter().enumerate() {
            let i = l.generator() - 1;
            let a_smoothing = state >> k & 1 == 0;
            let vertical = a_smoothing == l.is_positive();
            a_count += if a_smoothing { 1 } else { -1 };
            let (in_l, in_r) = (cur[i], cur[i + 1]);
            let (out_l, out_r) = (next_id, next_id + 1);
            next_id += 2;
            if vertical {
                dsu.union(in_l, out_l);
                dsu.union(in_r, out_r);
            } else {
                dsu.union(in_l, in_r);
                dsu.union(out_l, out_r);
            }
            cur[i] = out_l;
            cur[i + 1] = out_r;
        }
        for (j, &end) in cur.iter().enumerate() {
            dsu.union(end, j);
        }
        let used = next_id;
        let loops = dsu.classes(used);
        add_state(&mut acc, a_count, loops);
    }
    finish(acc)
}

/// Kauffman bracket from a PD code: the A-smoothing of `X[a,b,c,d]` joins
/// `(a,b)` and `(c,d)`, the B-smoothing joins `(a,d)` and `(b,c)`.
pub fn naive_bracket_pd(pd: &PdCode) -> LaurentPoly {
    let c = pd.0.len();
    assert!(c <= 20);
    let max_label = pd.0.iter().flatten().copied().max().unwrap_or(0);
    let mut acc = BTreeMap::new();
    for state in 0u32..(1 << c) {
        let mut dsu = Dsu::new(max_label + 1);
        let mut a_count = 0i64;
        for (k, x) in pd.0.iter().enumerate() {
            if state >> k & 1 == 0 {
                dsu.union(x[0], x[1]);
                dsu.union(x[2], x[3]);
                a_count += 1;
            } else {
                dsu.union(x[0], x[3]);
                dsu.union(x[1], x[2]);
                a_count -= 1;
            }
        }
        let loops = (1..=max_label).filter(|&e| dsu.find(e) == e).count();
        add_state(&mut acc, a_count, loops);
    }
    finish(acc)
}

/// Smallest region subset with the given flip vector, by trying all subsets.
pub fn brute_min_regions(d: &PlanarDiagram, target: &regionum::BitVec) -> Option<usize> {
    let r = d.region_count();
    assert!(r <= 20);
    let rows = d.incidence_matrix();
    (0u32..(1 << r))
        .filter(|s| rows.combine(&regionum::BitVec::from_indices(r, (0..r).filter(|i| s >> i & 1 == 1))) == *target)
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Random braid word with the given strand count and length.
pub fn random_word(rng: &mut impl Rng, strands: usize, len: usize) -> BraidWord {
    let ints: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::from_ints(strands, &ints).unwrap()
}

pub fn random_signs(rng: &mut impl Rng, len: usize) -> Vec<i32> {
    (0..len).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect()
}

/// Random word using every generator at least once, so its closure diagram is connected.
pub fn random_connected_word(rng: &mut impl Rng, strands: usize, len: usize) -> BraidWord {
    assert!(len >= strands - 1);
    let mut ints: Vec<i32> = (1..strands as i32).collect();
    ints.extend(random_word(rng, strands, len + 1 - strands).to_ints());
    for i in (1..ints.len()).rev() {
        let j = rng.gen_range(0..=i);
        ints.swap(i, j);
    }
    let ints: Vec<i32> = ints.into_iter().map(|g| if rng.gen_bool(0.5) { g } else { -g.abs() }).collect();
    BraidWord::from_ints(strands, &ints).unwrap()
}
