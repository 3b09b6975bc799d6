mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regionum::bounds::{realize_regions, Realization};
use regionum::cases::{applicable_cases, case_bound};
use regionum::invariants::normalize_writhe;
use regionum::*;

fn toric(p: usize, q: usize) -> PlanarDiagram {
    close_braid(&toric_braid(p, q).unwrap()).unwrap()
}

#[test]
fn transfer_matrix_matches_braid_state_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let p = rng.gen_range(2..=5);
        let c = rng.gen_range(0..=12);
        let w = random_word(&mut rng, p, c);
        assert_eq!(kauffman_bracket(&w).unwrap(), naive_bracket_braid(&w), "{w}");
    }
}

#[test]
fn transfer_matrix_matches_pd_state_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let p = rng.gen_range(2..=5);
        let c = rng.gen_range(p - 1..=12);
        let w = random_connected_word(&mut rng, p, c);
        let pd = close_braid(&w).unwrap().to_pd();
        assert_eq!(kauffman_bracket(&w).unwrap(), naive_bracket_pd(&pd), "{w} {pd}");
    }
}

/// `V(T(2,q)) = t^{(q-1)/2} (1 - t^3 - t^{q+1} + t^{q+2}) / (1 - t^2)`, in `A` with `t = A^{-4}`.
fn torus_two_jones(q: i64) -> LaurentPoly {
    // numerator coefficients by power of t
    let mut num = vec![0i64; (q + 3) as usize];
    num[0] += 1;
    num[3] -= 1;
    num[(q + 1) as usize] -= 1;
    num[(q + 2) as usize] += 1;
    // divide by 1 - t^2
    let mut quo = vec![0i64; num.len()];
    for k in 0..num.len() {
        quo[k] = num[k] + if k >= 2 { quo[k - 2] } else { 0 };
    }
    assert!(quo[num.len() - 2..].iter().all(|&c| c == 0), "exact division");
    let shift = (q - 1) / 2;
    LaurentPoly::from_terms(quo.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (-4 * (k as i64 + shift), c)))
}

#[test]
fn two_strand_torus_knot_jones() {
    for q in [3usize, 5, 7] {
        let w = toric_braid(2, q).unwrap();
        let by_state_sum = normalize_writhe(&naive_bracket_braid(&w), w.writhe());
        assert_eq!(jones(&w).unwrap(), by_state_sum);
        assert_eq!(jones(&w).unwrap(), torus_two_jones(q as i64), "q = {q}");
    }
}

#[test]
fn min_weight_matches_exhaustive_subsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for (p, q) in [(2, 3), (2, 5), (3, 3), (3, 4), (2, 6), (4, 3)] {
        let d = toric(p, q);
        for _ in 0..10 {
            let r = d.region_count();
            let picks: Vec<usize> = (1..=r).filter(|_| rng.gen_bool(0.3)).collect();
            let v = d.flip_vector_of(&picks).unwrap();
            match realize_regions(&d, &v, None) {
                Realization::Realized { regions } => {
                    assert_eq!(Some(regions.len()), brute_min_regions(&d, &v), "K({p},{q}) {picks:?}");
                    assert_eq!(d.flip_vector_of(&regions).unwrap(), v);
                }
                other => panic!("{other:?}"),
            }
        }
    }
}

#[test]
fn unrealizable_matches_exhaustive_subsets() {
    let d = toric(2, 2);
    let e1 = BitVec::from_indices(2, [0]);
    assert_eq!(realize_regions(&d, &e1, None), Realization::Unrealizable);
    assert_eq!(brute_min_regions(&d, &e1), None);
}

#[test]
fn k33_single_region_by_exhaustion() {
    let spec = TorusLinkSpec::new(3, 3).unwrap();
    let case = applicable_cases(&spec)[0];
    let v = bounds::flip_vector_for(&spec, &case).unwrap();
    assert_eq!(v.ones().collect::<Vec<_>>(), vec![3, 4, 5]);
    let d = toric(3, 3);
    assert_eq!((d.crossing_count(), d.region_count()), (6, 8));
    assert_eq!(brute_min_regions(&d, &v), Some(1));
    assert_eq!(case_bound(&spec, &case), 1);
}

#[test]
fn search_minimality_against_random_subsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for (p, q) in [(3, 4), (3, 5), (2, 7)] {
        let spec = TorusLinkSpec::new(p, q).unwrap();
        let report = brute_force_ur(&spec, &SearchOptions::up_to(4)).unwrap();
        let value = report.value().unwrap();
        let d = toric(p as usize, q as usize);
        for _ in 0..200 {
            let k = rng.gen_range(0..value);
            let mut picks: Vec<usize> = (1..=d.region_count()).collect();
            for i in (1..picks.len()).rev() {
                picks.swap(i, rng.gen_range(0..=i));
            }
            picks.truncate(k);
            let w = d.apply_regions(&picks).unwrap().word().unwrap().clone();
            assert_ne!(certify_unlink(&w).verdict, Verdict::Certified, "{spec} {picks:?}");
        }
        let witness = report.witness.unwrap();
        let w = d.apply_regions(&witness).unwrap().word().unwrap().clone();
        assert_eq!(certify_unlink(&w).verdict, Verdict::Certified);
    }
}

#[test]
fn pd_round_trip_keeps_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..30 {
        let p = rng.gen_range(2..=5);
        let len = rng.gen_range(p..=14);
        let w = random_connected_word(&mut rng, p, len);
        let d = close_braid(&w).unwrap();
        let back = PlanarDiagram::from_pd(&d.to_pd()).unwrap();
        assert_eq!(back.crossing_count(), d.crossing_count());
        assert_eq!(back.region_count(), d.region_count());
        assert_eq!(back.components(), d.components());
        let totals = |x: &PlanarDiagram| {
            let l = x.linking_data();
            let mut v: Vec<i64> = (0..l.components).map(|i| l.total_linking(i)).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(totals(&back), totals(&d), "{w}");
        assert_eq!(naive_bracket_pd(&back.to_pd()), naive_bracket_pd(&d.to_pd()));
    }
}
